"""A complete toy RSA cycle, with the totient doing the heavy lifting.

Everything here is exact and tiny on purpose: the point is to watch the
mechanism (totient, modular inverse, square-and-multiply) work, not to
protect secrets.
"""

from exactcomb.number_theory import (
    euler_phi,
    factorize,
    fermat_exponent_check,
    mod_pow,
    phi_scan,
    rsa_decrypt,
    rsa_encrypt,
    rsa_keygen,
)

n = 210
print(f"factorize({n}) =", " * ".join(
    f"{p}^{e}" if e > 1 else str(p) for p, e in factorize(n)
))
print(f"phi({n}) = {euler_phi(n)} by the product formula,"
      f" {phi_scan(n)} by literally scanning for coprimes")

print("\nFermat check: 12^3 = 12^19 (mod 17)?",
      fermat_exponent_check(12, 3, 19, 17))

print("\nKey generation with p=61, q=53, e=17:")
key = rsa_keygen(61, 53, 17)
print(f"  n = {key.n}, phi = {key.phi}, private exponent d = {key.d}")

message = 2790
dark = key.encrypt(message)
print(f"  encrypt {message} -> {dark};  decrypt {dark} -> {key.decrypt(dark)}")

print("\nEvery message round-trips, coprime to n or not:")
for m in (2, 61, 53, 61 * 53 - 1):
    c = rsa_encrypt(key.n, key.e, m)
    back = rsa_decrypt(key.n, key.d, c)
    print(f"  m={m:5d} -> c={c:5d} -> {back}")

print("\nThe classic n = 25 walkthrough (raw exponents, keygen would refuse")
print("the repeated prime 5):")
print("  14^3 mod 25 =", mod_pow(14, 3, 25), "   19^7 mod 25 =", mod_pow(19, 7, 25))

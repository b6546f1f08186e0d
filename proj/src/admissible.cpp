#include "dedekind/admissible.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dedekind {

namespace {

using u128 = unsigned __int128;

u64 mulmod(u64 x, u64 y, u64 m) { return static_cast<u64>(static_cast<u128>(x) * y % m); }

u64 powmod(u64 base, u64 exp, u64 m) {
  u64 result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

// Inverse of x modulo m for gcd(x, m) == 1, m >= 2.
u64 invmod(u64 x, u64 m) {
  __int128 old_r = x % m, r = m;
  __int128 old_u = 1, u = 0;
  while (r != 0) {
    const __int128 q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_u -= q * u;
    std::swap(old_u, u);
  }
  __int128 inv = old_u % static_cast<__int128>(m);
  if (inv < 0) inv += m;
  return static_cast<u64>(inv);
}

// Roots of x^2 + 1 modulo p^e for a prime p == 1 (mod 4).
std::vector<u64> roots_mod_prime_power(u64 p, unsigned e) {
  u64 x = *sqrt_mod_prime(p - 1, p);
  u64 modulus = p;
  for (unsigned k = 1; k < e; ++k) {
    const u64 next = modulus * p;
    // x <- x - (x^2 + 1) / (2x) mod p^(k+1)
    const u64 fx = (mulmod(x, x, next) + 1) % next;
    const u64 step = mulmod(fx, invmod(mulmod(2, x, next), next), next);
    x = (x + next - step) % next;
    modulus = next;
  }
  std::vector<u64> out{x, modulus - x};
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Factorization factorize(u64 n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "factorize(0)");
  Factorization out;
  auto strip = [&](u64 p) {
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e != 0) out.push_back({p, e});
  };
  strip(2);
  for (u64 p = 3; p <= n / p; p += 2) strip(p);
  if (n > 1) out.push_back({n, 1});
  return out;
}

std::optional<u64> sqrt_mod_prime(u64 n, u64 p) {
  n %= p;
  if (n == 0) return 0;
  if (p == 2) return n;
  if (powmod(n, (p - 1) / 2, p) != 1) return std::nullopt;

  u64 q = p - 1;
  unsigned s = 0;
  while ((q & 1) == 0) {
    q >>= 1;
    ++s;
  }
  u64 z = 2;
  while (powmod(z, (p - 1) / 2, p) != p - 1) ++z;

  unsigned m = s;
  u64 c = powmod(z, q, p);
  u64 t = powmod(n, q, p);
  u64 r = powmod(n, (q + 1) / 2, p);
  while (t != 1) {
    unsigned i = 0;
    for (u64 probe = t; probe != 1; probe = mulmod(probe, probe, p)) ++i;
    u64 b = c;
    for (unsigned k = 0; k + i + 1 < m; ++k) b = mulmod(b, b, p);
    m = i;
    c = mulmod(b, b, p);
    t = mulmod(t, c, p);
    r = mulmod(r, b, p);
  }
  return std::min(r, p - r);
}

Admissibility is_admissible(u64 t) {
  if (t == 0) throw Error(ErrorCode::kInvalidArgument, "t must be >= 1");
  AdmissibleWitness w;
  w.t = t;
  w.factorization = factorize(t);
  for (const PrimePower& pp : w.factorization) {
    if (pp.prime == 2) {
      if (pp.exponent > 1) return {};
      w.doubled = true;
    } else if (pp.prime % 4 != 1) {
      return {};
    }
  }
  w.m = w.doubled ? t / 2 : t;
  w.roots = sqrt_minus_one(t);
  return {true, std::move(w)};
}

std::vector<u64> sqrt_minus_one(u64 t) {
  if (t == 0) throw Error(ErrorCode::kInvalidArgument, "t must be >= 1");
  std::vector<u64> roots{0};
  u64 modulus = 1;
  for (const PrimePower& pp : factorize(t)) {
    std::vector<u64> local;
    u64 local_mod = 1;
    if (pp.prime == 2) {
      if (pp.exponent > 1) {
        throw Error(ErrorCode::kNotAdmissible, std::to_string(t) + " is divisible by 4");
      }
      local = {1};
      local_mod = 2;
    } else if (pp.prime % 4 != 1) {
      throw Error(ErrorCode::kNotAdmissible,
                  std::to_string(t) + " has prime factor " + std::to_string(pp.prime) +
                      " == 3 mod 4");
    } else {
      local = roots_mod_prime_power(pp.prime, pp.exponent);
      for (unsigned k = 0; k < pp.exponent; ++k) local_mod *= pp.prime;
    }
    // CRT: x == r (mod modulus), x == l (mod local_mod).
    std::vector<u64> combined;
    const u64 next = modulus * local_mod;
    const u64 inv = local_mod == 1 || modulus == 1 ? 0 : invmod(modulus % local_mod, local_mod);
    for (u64 r : roots) {
      for (u64 l : local) {
        u64 x;
        if (modulus == 1) {
          x = l;
        } else {
          const u64 diff = (l + local_mod - r % local_mod) % local_mod;
          x = r + modulus * mulmod(diff, inv, local_mod);
        }
        combined.push_back(x % next);
      }
    }
    roots = std::move(combined);
    modulus = next;
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

Theorem1Stream::Theorem1Stream(u64 t_max, u64 b_max, u64 multiplier)
    : t_max_(t_max), b_max_(b_max), multiplier_(multiplier) {
  if (t_max < 1 || b_max < 1 || multiplier < 1) {
    throw Error(ErrorCode::kInvalidArgument, "t_max, b_max and multiplier must be >= 1");
  }
}

bool Theorem1Stream::advance_t() {
  while (t_ < t_max_) {
    ++t_;
    const Admissibility adm = is_admissible(t_);
    if (!adm.admissible) continue;
    a_values_.clear();
    const u64 a_max = multiplier_ * t_;
    for (u64 base = 0; base <= a_max; base += t_) {
      for (u64 r : adm.witness->roots) {
        const u64 a = base + r;
        if (a >= 1 && a <= a_max) a_values_.push_back(a);
      }
    }
    a_index_ = 0;
    b_ = 0;
    if (!a_values_.empty()) return true;
  }
  return false;
}

std::optional<Theorem1Instance> Theorem1Stream::next() {
  if (t_ == 0 && !advance_t()) return std::nullopt;
  while (t_ <= t_max_ && a_index_ < a_values_.size()) {
    const u64 a = a_values_[a_index_];
    while (b_ < b_max_) {
      ++b_;
      if (std::gcd(a, b_) == 1 && std::gcd(b_, t_) == 1) {
        return Theorem1Instance::make(Int(t_), Int(a), Int(b_));
      }
    }
    b_ = 0;
    if (++a_index_ == a_values_.size() && !advance_t()) break;
  }
  a_values_.clear();
  return std::nullopt;
}

std::vector<Theorem1Instance> enumerate_theorem1_instances(u64 t_max, u64 b_max,
                                                           u64 multiplier) {
  std::vector<Theorem1Instance> out;
  Theorem1Stream stream(t_max, b_max, multiplier);
  while (auto inst = stream.next()) out.push_back(std::move(*inst));
  return out;
}

}  // namespace dedekind

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "arcbound/numlab/intmatrix.hpp"

namespace arcbound::numlab {

using Vec = std::vector<std::int64_t>;

// Elementary arithmetic on small moduli.
std::int64_t gcd64(std::int64_t a, std::int64_t b);
/// Inverse of a mod q; throws DomainError unless gcd(a, q) = 1.
std::int64_t inverse_mod(std::int64_t a, std::int64_t q);
int mobius(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
/// Prime factorisation as (p, e) pairs in increasing p.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);
bool is_prime(std::int64_t n);

/// Calls f on every x ∈ (ℤ/q)ⁿ in lexicographic order.
void for_each_residue(std::size_t n, std::int64_t q, const std::function<void(const Vec&)>& f);

enum class NullMethod { Smith, Brute };
const char* null_method_name(NullMethod m);
NullMethod parse_null_method(const std::string& s);

/// #{x mod q : Mx ≡ 0}. Smith: ∏ gcd(q, λ_i). Brute: direct count, qⁿ ≤ 10⁷.
Integer null_count(const IntMatrix& m, std::int64_t q, NullMethod method);

/// #{x mod q : Mx ≡ rhs}, brute force (qⁿ ≤ 10⁷).
std::int64_t solution_count(const IntMatrix& m, const Vec& rhs, std::int64_t q);
/// The solution set itself, in lexicographic order.
std::vector<Vec> solution_set(const IntMatrix& m, const Vec& rhs, std::int64_t q);

/// 1 iff gcd(q, λ_i) | (Tᵗv)_i for every i, T from the Smith form of M.
int delta_q(const IntMatrix& m, std::int64_t q, const std::vector<Integer>& v);

/// Σ*_{b mod d} #Null_d(b₁M₁ + b₂M₂), the sum over b with gcd(b₁, b₂, d) = 1.
Integer null_pencil_sum(const IntMatrix& m1, const IntMatrix& m2, std::int64_t d);

/// Σ*_{a mod q} e_q(a₁f + a₂g) = Σ_{e | q, e | f, e | g} μ(q/e)·e², an integer.
std::int64_t primitive_pair_sum(std::int64_t f, std::int64_t g, std::int64_t q);

}  // namespace arcbound::numlab

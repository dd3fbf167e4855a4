#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hypersym/cyclotomic.hpp"
#include "hypersym/spectrum.hpp"

namespace hypersym {

// Weakly decreasing list of positive parts. Also used for cycle types.
class Partition {
public:
    Partition() = default;
    /// Sorts the parts; throws InvalidArgument on a non-positive part.
    explicit Partition(std::vector<std::int64_t> parts);

    /// Parses "[3,2,1]".
    static Partition parse(const std::string& text);

    const std::vector<std::int64_t>& parts() const noexcept { return parts_; }
    std::int64_t n() const noexcept { return n_; }
    std::int64_t length() const noexcept { return static_cast<std::int64_t>(parts_.size()); }
    std::int64_t operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }

    std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    // Reverse lexicographic: larger partitions first, so (n) precedes (1^n).
    friend std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
        return b.parts_ <=> a.parts_;
    }

private:
    std::vector<std::int64_t> parts_;
    std::int64_t n_ = 0;
};

/// All partitions of n, in the order (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(std::int64_t n);

/// Centralizer order z_mu = prod_i i^{d_i} d_i!.
BigInt centralizer_order(const Partition& mu);
/// n! / z_mu.
BigInt class_size(const Partition& mu);

/// chi^lambda(mu) by the Murnaghan-Nakayama rule.
std::int64_t mn_character(const Partition& lambda, const Partition& mu);

// Character table of S_n; rows are irreducibles, columns classes, both
// indexed in partitions(n) order.
class CharacterTable {
public:
    explicit CharacterTable(std::int64_t n);
    std::int64_t n() const noexcept { return n_; }
    const std::vector<Partition>& classes() const noexcept { return classes_; }
    std::int64_t value(std::size_t lambda, std::size_t mu) const { return table_[lambda][mu]; }
    std::size_t index_of(const Partition& p) const;

private:
    std::int64_t n_;
    std::vector<Partition> classes_;
    std::vector<std::vector<std::int64_t>> table_;
};

/// Shared, lazily built table for S_n.
const CharacterTable& character_table(std::int64_t n);

// A function on the conjugacy classes of S_n.
class ClassFunction {
public:
    /// Throws InvalidArgument unless every partition of n has a value.
    ClassFunction(std::int64_t n, std::map<Partition, Cyclotomic> values);

    std::int64_t n() const noexcept { return n_; }
    const std::map<Partition, Cyclotomic>& values() const noexcept { return values_; }
    const Cyclotomic& operator()(const Partition& mu) const;

    friend ClassFunction operator+(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator-(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator*(const ClassFunction& a, const ClassFunction& b);
    friend ClassFunction operator*(const ClassFunction& a, const Cyclotomic& s);
    friend bool operator==(const ClassFunction& a, const ClassFunction& b) {
        return a.n_ == b.n_ && a.values_ == b.values_;
    }

    std::string to_string() const;

private:
    std::int64_t n_;
    std::map<Partition, Cyclotomic> values_;
};

ClassFunction irreducible_character(const Partition& lambda);
ClassFunction sign_character(std::int64_t n);

/// (1/n!) sum_mu |C_mu| f(mu) conj(g(mu)).
Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g);

/// <f, chi^lambda> for every lambda; throws NotRational if one is irrational.
std::map<Partition, Rational> decompose(const ClassFunction& f);

struct CharacterVerdict {
    bool is_character = true;
    std::map<Partition, Rational> multiplicities;  // rational multiplicities only
    std::optional<Partition> witness;              // first offending lambda
    std::string reason;                            // empty when is_character
};

CharacterVerdict is_character(const ClassFunction& f);

/// Number of parts divisible by e.
std::int64_t m_e(const Partition& mu, std::int64_t e);
/// m_e for e > 1, m_1 - 1 for e = 1.
std::int64_t m_prime_e(const Partition& mu, std::int64_t e);
/// gcd of the parts.
std::int64_t d_of(const Partition& mu);
/// (-1)^{n - #parts}.
std::int64_t sign_of(const Partition& mu);

/// Spectrum of a permutation matrix of cycle type mu.
Spectrum permutation_spectrum(const Partition& mu);
/// Same with one eigenvalue 1 removed (the standard representation).
Spectrum reduced_permutation_spectrum(const Partition& mu);

/// sigma -> ((-1)^n / d) sum_{e | d} phi(e) (1-d)^{m_e(sigma)} on S_{n+2}.
ClassFunction type_I_character(std::int64_t n, std::int64_t d);
/// sigma -> ((-1)^n / d) sum_{e | d} phi(e) (1-d)^{m'_e(sigma)} on S_{n+3}.
ClassFunction type_II_character(std::int64_t n, std::int64_t d);

/// sigma -> l^{m_1(sigma)}.
ClassFunction theta(std::int64_t n, std::int64_t l);
/// sigma -> l^{m_1(sigma) - 1}.
ClassFunction theta_tilde(std::int64_t n, std::int64_t l);
/// sigma -> sg(sigma) l^{m_1(sigma) - 1}.
ClassFunction signed_theta_tilde(std::int64_t n, std::int64_t l);

// A finite abelian group given as a product of cyclic groups.
struct AbelianGroupSpec {
    explicit AbelianGroupSpec(std::vector<std::int64_t> orders = {});
    std::vector<std::int64_t> cyclic_orders;
    std::int64_t order() const;
    std::string to_string() const;
};

/// Size of the kernel of multiplication by d_of(mu) on A.
BigInt d_A(const Partition& mu, const AbelianGroupSpec& a);
/// sigma -> d_A(sigma) |A|^{m_1(sigma) - 1}: the permutation character of the
/// zero-sum tuples M in A^n.
ClassFunction chi_M(std::int64_t n, const AbelianGroupSpec& a);

/// Number of semistandard tableaux of shape lambda and content mu.
BigInt kostka(const Partition& lambda, const Partition& mu);
/// l(l-1)...(l-k+1) / prod_i d_i!, k = #parts, d_i = number of parts equal to i.
BigInt c_mu(const Partition& mu, std::int64_t l);
/// sum_mu c_mu(l) K_{lambda mu}, checked against <chi^lambda, theta_{n,l}>.
BigInt schur_multiplicity_theta(const Partition& lambda, std::int64_t l);

/// binomial(n+l-1, n), checked against the inner product with theta.
BigInt trivial_multiplicity(std::int64_t n, std::int64_t l);
/// binomial(l, n), checked against the inner product with theta.
BigInt sign_multiplicity(std::int64_t n, std::int64_t l);

inline constexpr std::int64_t kDefaultAlphaCap = 12;

/// Least alpha >= 1 with binomial(n + l^alpha - 1, n) != 0 mod l^alpha.
std::int64_t find_min_alpha(std::int64_t n, std::int64_t l, std::int64_t cap = kDefaultAlphaCap);

}  // namespace hypersym

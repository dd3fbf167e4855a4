#include "hypersym/symgroup.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>

#include "hypersym/errors.hpp"

namespace hypersym {

Partition::Partition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (auto p : parts_) {
        if (p < 1) throw InvalidArgument("partition parts must be positive");
        n_ += p;
    }
    std::sort(parts_.begin(), parts_.end(), std::greater<>());
}

Partition Partition::parse(const std::string& text) {
    std::size_t i = 0;
    auto skip_ws = [&] {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    };
    skip_ws();
    if (i >= text.size() || text[i] != '[') throw ParseError("expected '[' in partition '" + text + "'", i);
    ++i;
    std::vector<std::int64_t> parts;
    skip_ws();
    if (i < text.size() && text[i] == ']') {
        ++i;
    } else {
        while (true) {
            skip_ws();
            const std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == start) throw ParseError("expected a positive integer in partition '" + text + "'", start);
            const std::int64_t p = std::stoll(text.substr(start, i - start));
            if (p < 1) throw ParseError("partition parts must be positive", start);
            parts.push_back(p);
            skip_ws();
            if (i < text.size() && text[i] == ',') {
                ++i;
                continue;
            }
            if (i < text.size() && text[i] == ']') {
                ++i;
                break;
            }
            throw ParseError("expected ',' or ']' in partition '" + text + "'", i);
        }
    }
    skip_ws();
    if (i != text.size()) throw ParseError("trailing characters in partition '" + text + "'", i);
    return Partition(std::move(parts));
}

std::string Partition::to_string() const {
    std::string out = "[";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out + "]";
}

namespace {

void partitions_rec(std::int64_t left, std::int64_t max_part, std::vector<std::int64_t>& cur,
                    std::vector<Partition>& out) {
    if (left == 0) {
        out.emplace_back(cur);
        return;
    }
    for (std::int64_t p = std::min(left, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(left - p, p, cur, out);
        cur.pop_back();
    }
}

void require_degree(std::int64_t n) {
    if (n < 1) throw InvalidArgument("symmetric group degree must be at least 1");
}

using MnMemo = std::map<std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>, std::int64_t>;

// chi^lambda on the class with cycle lengths mu[start..], stripping one
// border strip of length mu[start] at a time via beta-numbers.
std::int64_t mn_rec(const std::vector<std::int64_t>& lam, const std::vector<std::int64_t>& mu, std::size_t start,
                    MnMemo& memo) {
    if (start == mu.size()) return lam.empty() ? 1 : 0;
    std::vector<std::int64_t> rest(mu.begin() + static_cast<std::ptrdiff_t>(start), mu.end());
    auto key = std::make_pair(lam, std::move(rest));
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    const std::int64_t r = mu[start];
    const std::size_t k = lam.size();
    std::vector<std::int64_t> beta(k);
    for (std::size_t i = 0; i < k; ++i) beta[i] = lam[i] + static_cast<std::int64_t>(k - 1 - i);
    std::int64_t total = 0;
    for (std::size_t i = 0; i < k; ++i) {
        const std::int64_t b = beta[i] - r;
        if (b < 0 || std::find(beta.begin(), beta.end(), b) != beta.end()) continue;
        std::int64_t between = 0;
        for (auto x : beta)
            if (x > b && x < beta[i]) ++between;
        std::vector<std::int64_t> nb = beta;
        nb[i] = b;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<std::int64_t> sub;
        for (std::size_t j = 0; j < k; ++j) {
            const std::int64_t part = nb[j] - static_cast<std::int64_t>(k - 1 - j);
            if (part > 0) sub.push_back(part);
        }
        const std::int64_t v = mn_rec(sub, mu, start + 1, memo);
        total += between % 2 == 0 ? v : -v;
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::int64_t count_ones(const Partition& mu) { return m_e(mu, 1); }

ClassFunction build(std::int64_t n, const std::function<Cyclotomic(const Partition&)>& f) {
    std::map<Partition, Cyclotomic> values;
    for (const auto& mu : partitions(n)) values.emplace(mu, f(mu));
    return ClassFunction(n, std::move(values));
}

// ((-1)^n / d) sum_{e | d} phi(e) (1-d)^{m(e)}, asserted integral.
Cyclotomic hypersurface_value(std::int64_t n, std::int64_t d, const std::function<std::int64_t(std::int64_t)>& m) {
    BigInt sum = 0;
    for (auto e : divisors(d)) sum += euler_phi(e) * ipow(BigInt(1 - d), static_cast<std::uint64_t>(m(e)));
    if (sum % d != 0) throw NonIntegralValue("class function value " + sum.get_str() + "/" + std::to_string(d));
    BigInt v = sum / d;
    if (n % 2 != 0) v = -v;
    return Cyclotomic(Rational(v));
}

BigInt kostka_rec(const std::vector<std::int64_t>& lam, const std::vector<std::int64_t>& mu, std::size_t len,
                  std::map<std::pair<std::vector<std::int64_t>, std::size_t>, BigInt>& memo);

// Removes a horizontal strip of size m from lam, row by row.
void strips(const std::vector<std::int64_t>& lam, std::size_t row, std::int64_t m, std::vector<std::int64_t>& cur,
            const std::vector<std::int64_t>& mu, std::size_t len, BigInt& acc,
            std::map<std::pair<std::vector<std::int64_t>, std::size_t>, BigInt>& memo) {
    if (row == lam.size()) {
        if (m != 0) return;
        std::vector<std::int64_t> sub;
        for (auto p : cur)
            if (p > 0) sub.push_back(p);
        acc += kostka_rec(sub, mu, len - 1, memo);
        return;
    }
    const std::int64_t lo = row + 1 < lam.size() ? lam[row + 1] : 0;
    for (std::int64_t keep = lam[row]; keep >= lo; --keep) {
        const std::int64_t take = lam[row] - keep;
        if (take > m) break;
        cur[row] = keep;
        strips(lam, row + 1, m - take, cur, mu, len, acc, memo);
    }
}

BigInt kostka_rec(const std::vector<std::int64_t>& lam, const std::vector<std::int64_t>& mu, std::size_t len,
                  std::map<std::pair<std::vector<std::int64_t>, std::size_t>, BigInt>& memo) {
    if (len == 0) return lam.empty() ? BigInt(1) : BigInt(0);
    auto key = std::make_pair(lam, len);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    BigInt acc = 0;
    std::vector<std::int64_t> cur = lam;
    strips(lam, 0, mu[len - 1], cur, mu, len, acc, memo);
    memo.emplace(std::move(key), acc);
    return acc;
}

}  // namespace

std::vector<Partition> partitions(std::int64_t n) {
    if (n < 0) throw InvalidArgument("partitions of a negative integer");
    std::vector<Partition> out;
    std::vector<std::int64_t> cur;
    partitions_rec(n, n, cur, out);
    return out;
}

BigInt centralizer_order(const Partition& mu) {
    std::map<std::int64_t, std::int64_t> d;
    for (auto p : mu.parts()) ++d[p];
    BigInt z = 1;
    for (const auto& [i, di] : d) z *= ipow(BigInt(i), static_cast<std::uint64_t>(di)) * factorial(di);
    return z;
}

BigInt class_size(const Partition& mu) { return factorial(mu.n()) / centralizer_order(mu); }

CharacterTable::CharacterTable(std::int64_t n) : n_(n), classes_(partitions(n)) {
    require_degree(n);
    MnMemo memo;
    for (const auto& lam : classes_) {
        std::vector<std::int64_t> row;
        for (const auto& mu : classes_) row.push_back(mn_rec(lam.parts(), mu.parts(), 0, memo));
        table_.push_back(std::move(row));
    }
}

std::size_t CharacterTable::index_of(const Partition& p) const {
    auto it = std::lower_bound(classes_.begin(), classes_.end(), p);
    if (it == classes_.end() || !(*it == p))
        throw InvalidArgument(p.to_string() + " is not a partition of " + std::to_string(n_));
    return static_cast<std::size_t>(it - classes_.begin());
}

const CharacterTable& character_table(std::int64_t n) {
    static std::mutex mutex;
    static std::map<std::int64_t, std::unique_ptr<CharacterTable>> cache;
    std::lock_guard<std::mutex> lock(mutex);
    auto& slot = cache[n];
    if (!slot) slot = std::make_unique<CharacterTable>(n);
    return *slot;
}

std::int64_t mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) throw InvalidArgument("mn_character needs partitions of the same n");
    const auto& t = character_table(lambda.n());
    return t.value(t.index_of(lambda), t.index_of(mu));
}

ClassFunction::ClassFunction(std::int64_t n, std::map<Partition, Cyclotomic> values)
    : n_(n), values_(std::move(values)) {
    require_degree(n);
    const auto parts = partitions(n);
    if (values_.size() != parts.size()) throw InvalidArgument("class function must have one value per partition of n");
    for (const auto& mu : parts)
        if (!values_.count(mu)) throw InvalidArgument("class function has no value on " + mu.to_string());
}

const Cyclotomic& ClassFunction::operator()(const Partition& mu) const {
    auto it = values_.find(mu);
    if (it == values_.end()) throw InvalidArgument(mu.to_string() + " is not a partition of " + std::to_string(n_));
    return it->second;
}

namespace {

template <class Op>
ClassFunction combine(const ClassFunction& a, const ClassFunction& b, Op op) {
    if (a.n() != b.n()) throw InvalidArgument("class functions on different symmetric groups");
    std::map<Partition, Cyclotomic> out;
    for (const auto& [mu, v] : a.values()) out.emplace(mu, op(v, b(mu)));
    return ClassFunction(a.n(), std::move(out));
}

}  // namespace

ClassFunction operator+(const ClassFunction& a, const ClassFunction& b) {
    return combine(a, b, [](const Cyclotomic& x, const Cyclotomic& y) { return x + y; });
}
ClassFunction operator-(const ClassFunction& a, const ClassFunction& b) {
    return combine(a, b, [](const Cyclotomic& x, const Cyclotomic& y) { return x - y; });
}
ClassFunction operator*(const ClassFunction& a, const ClassFunction& b) {
    return combine(a, b, [](const Cyclotomic& x, const Cyclotomic& y) { return x * y; });
}
ClassFunction operator*(const ClassFunction& a, const Cyclotomic& s) {
    std::map<Partition, Cyclotomic> out;
    for (const auto& [mu, v] : a.values()) out.emplace(mu, v * s);
    return ClassFunction(a.n(), std::move(out));
}

std::string ClassFunction::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [mu, v] : values_) {
        if (!first) os << ", ";
        first = false;
        os << mu.to_string() << ": " << v.to_string();
    }
    return os.str();
}

ClassFunction irreducible_character(const Partition& lambda) {
    const auto& t = character_table(lambda.n());
    const std::size_t row = t.index_of(lambda);
    return build(lambda.n(), [&](const Partition& mu) { return Cyclotomic(t.value(row, t.index_of(mu))); });
}

ClassFunction sign_character(std::int64_t n) {
    return build(n, [](const Partition& mu) { return Cyclotomic(sign_of(mu)); });
}

Cyclotomic inner_product(const ClassFunction& f, const ClassFunction& g) {
    if (f.n() != g.n()) throw InvalidArgument("inner product of class functions on different symmetric groups");
    Cyclotomic sum;
    for (const auto& [mu, v] : f.values()) sum = sum + Cyclotomic(Rational(class_size(mu))) * v * g(mu).conj();
    return sum / Cyclotomic(Rational(factorial(f.n())));
}

namespace {

std::vector<std::pair<Partition, Cyclotomic>> multiplicities(const ClassFunction& f) {
    const auto& t = character_table(f.n());
    const auto& cls = t.classes();
    std::vector<Cyclotomic> weighted;
    for (const auto& mu : cls) weighted.push_back(Cyclotomic(Rational(class_size(mu))) * f(mu));
    const Cyclotomic order(Rational(factorial(f.n())));
    std::vector<std::pair<Partition, Cyclotomic>> out;
    for (std::size_t l = 0; l < cls.size(); ++l) {
        Cyclotomic sum;
        for (std::size_t m = 0; m < cls.size(); ++m)
            if (t.value(l, m) != 0) sum = sum + weighted[m] * Cyclotomic(t.value(l, m));
        out.emplace_back(cls[l], sum / order);
    }
    return out;
}

}  // namespace

std::map<Partition, Rational> decompose(const ClassFunction& f) {
    std::map<Partition, Rational> out;
    for (const auto& [lam, m] : multiplicities(f)) out.emplace(lam, m.to_rational());
    return out;
}

CharacterVerdict is_character(const ClassFunction& f) {
    CharacterVerdict v;
    for (const auto& [lam, m] : multiplicities(f)) {
        std::string problem;
        if (!m.is_rational()) {
            problem = "multiplicity of " + lam.to_string() + " is not rational: " + m.to_string();
        } else {
            const Rational r = m.to_rational();
            v.multiplicities.emplace(lam, r);
            if (!is_integer(r))
                problem = "multiplicity of " + lam.to_string() + " is not an integer: " + hypersym::to_string(r);
            else if (r < 0)
                problem = "multiplicity of " + lam.to_string() + " is negative: " + hypersym::to_string(r);
        }
        if (!problem.empty() && v.is_character) {
            v.is_character = false;
            v.witness = lam;
            v.reason = problem;
        }
    }
    return v;
}

std::int64_t m_e(const Partition& mu, std::int64_t e) {
    if (e < 1) throw InvalidArgument("m_e needs e >= 1");
    std::int64_t c = 0;
    for (auto p : mu.parts())
        if (p % e == 0) ++c;
    return c;
}

std::int64_t m_prime_e(const Partition& mu, std::int64_t e) { return e == 1 ? m_e(mu, 1) - 1 : m_e(mu, e); }

std::int64_t d_of(const Partition& mu) {
    std::int64_t g = 0;
    for (auto p : mu.parts()) g = gcd(g, p);
    return g;
}

std::int64_t sign_of(const Partition& mu) { return (mu.n() - mu.length()) % 2 == 0 ? 1 : -1; }

Spectrum permutation_spectrum(const Partition& mu) {
    if (mu.n() < 1) throw EmptySpectrum("empty cycle type");
    std::int64_t n = 1;
    for (auto p : mu.parts()) n = lcm(n, p);
    std::map<std::int64_t, std::int64_t> mults;
    for (auto p : mu.parts())
        for (std::int64_t k = 0; k < p; ++k) ++mults[k * (n / p)];
    return Spectrum(n, mults);
}

Spectrum reduced_permutation_spectrum(const Partition& mu) {
    const Spectrum s = permutation_spectrum(mu);
    auto mults = s.mults();
    --mults[0];
    return Spectrum(s.conductor(), mults);
}

ClassFunction type_I_character(std::int64_t n, std::int64_t d) {
    if (n < 1 || d < 2) throw InvalidArgument("type I character needs n >= 1, d >= 2");
    return build(n + 2, [&](const Partition& mu) {
        return hypersurface_value(n, d, [&](std::int64_t e) { return m_e(mu, e); });
    });
}

ClassFunction type_II_character(std::int64_t n, std::int64_t d) {
    if (n < 1 || d < 2) throw InvalidArgument("type II character needs n >= 1, d >= 2");
    return build(n + 3, [&](const Partition& mu) {
        return hypersurface_value(n, d, [&](std::int64_t e) { return m_prime_e(mu, e); });
    });
}

ClassFunction theta(std::int64_t n, std::int64_t l) {
    if (l < 1) throw InvalidArgument("theta needs l >= 1");
    return build(n, [&](const Partition& mu) {
        return Cyclotomic(Rational(ipow(BigInt(l), static_cast<std::uint64_t>(count_ones(mu)))));
    });
}

ClassFunction theta_tilde(std::int64_t n, std::int64_t l) {
    if (l < 1) throw InvalidArgument("theta_tilde needs l >= 1");
    return build(n, [&](const Partition& mu) {
        return Cyclotomic(Rational(ipow(BigInt(l), static_cast<std::uint64_t>(count_ones(mu) - 1))));
    });
}

ClassFunction signed_theta_tilde(std::int64_t n, std::int64_t l) { return theta_tilde(n, l) * sign_character(n); }

AbelianGroupSpec::AbelianGroupSpec(std::vector<std::int64_t> orders) : cyclic_orders(std::move(orders)) {
    for (auto c : cyclic_orders)
        if (c < 2) throw InvalidArgument("cyclic factor orders must be at least 2");
}

std::int64_t AbelianGroupSpec::order() const {
    std::int64_t l = 1;
    for (auto c : cyclic_orders) l *= c;
    return l;
}

std::string AbelianGroupSpec::to_string() const {
    if (cyclic_orders.empty()) return "trivial";
    std::string out;
    for (std::size_t i = 0; i < cyclic_orders.size(); ++i) {
        if (i) out += " x ";
        out += "Z/" + std::to_string(cyclic_orders[i]);
    }
    return out;
}

BigInt d_A(const Partition& mu, const AbelianGroupSpec& a) {
    BigInt out = 1;
    const std::int64_t g = d_of(mu);
    for (auto c : a.cyclic_orders) out *= gcd(g, c);
    return out;
}

ClassFunction chi_M(std::int64_t n, const AbelianGroupSpec& a) {
    const BigInt l = a.order();
    return build(n, [&](const Partition& mu) {
        return Cyclotomic(Rational(d_A(mu, a) * ipow(l, static_cast<std::uint64_t>(count_ones(mu) - 1))));
    });
}

BigInt kostka(const Partition& lambda, const Partition& mu) {
    if (lambda.n() != mu.n()) throw InvalidArgument("kostka needs partitions of the same n");
    std::map<std::pair<std::vector<std::int64_t>, std::size_t>, BigInt> memo;
    return kostka_rec(lambda.parts(), mu.parts(), mu.parts().size(), memo);
}

BigInt c_mu(const Partition& mu, std::int64_t l) {
    if (l < 0) throw InvalidArgument("c_mu needs l >= 0");
    const std::int64_t k = mu.length();
    if (k > l) return 0;
    BigInt num = 1;
    for (std::int64_t i = 0; i < k; ++i) num *= l - i;
    std::map<std::int64_t, std::int64_t> d;
    for (auto p : mu.parts()) ++d[p];
    BigInt den = 1;
    for (const auto& [i, di] : d) den *= factorial(di);
    return num / den;
}

BigInt schur_multiplicity_theta(const Partition& lambda, std::int64_t l) {
    BigInt sum = 0;
    for (const auto& mu : partitions(lambda.n())) {
        const BigInt c = c_mu(mu, l);
        if (c != 0) sum += c * kostka(lambda, mu);
    }
    const Cyclotomic ip = inner_product(irreducible_character(lambda), theta(lambda.n(), l));
    if (!(ip == Cyclotomic(Rational(sum))))
        throw InternalMismatch("Kostka route gives " + sum.get_str() + ", inner product gives " + ip.to_string());
    return sum;
}

BigInt trivial_multiplicity(std::int64_t n, std::int64_t l) {
    require_degree(n);
    const BigInt b = binomial(n + l - 1, n);
    const Cyclotomic ip = inner_product(irreducible_character(Partition({n})), theta(n, l));
    if (!(ip == Cyclotomic(Rational(b))))
        throw InternalMismatch("trivial multiplicity " + b.get_str() + " vs inner product " + ip.to_string());
    return b;
}

BigInt sign_multiplicity(std::int64_t n, std::int64_t l) {
    require_degree(n);
    const BigInt b = binomial(l, n);
    const Cyclotomic ip = inner_product(sign_character(n), theta(n, l));
    if (!(ip == Cyclotomic(Rational(b))))
        throw InternalMismatch("sign multiplicity " + b.get_str() + " vs inner product " + ip.to_string());
    return b;
}

std::int64_t find_min_alpha(std::int64_t n, std::int64_t l, std::int64_t cap) {
    if (n < 1 || l < 2) throw InvalidArgument("find_min_alpha needs n >= 1, l >= 2");
    if (gcd(n, l) == 1) throw InvalidArgument("find_min_alpha needs gcd(n, l) != 1");
    if (cap < 1) throw InvalidArgument("alpha cap must be positive");
    BigInt q = 1;
    for (std::int64_t alpha = 1; alpha <= cap; ++alpha) {
        q *= l;
        BigInt top = q + (n - 1);
        BigInt b;
        mpz_bin_ui(b.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(n));
        if (b % q != 0) return alpha;
    }
    throw SearchCapExceeded("no alpha <= " + std::to_string(cap) + " for (n, l) = (" + std::to_string(n) + ", " +
                            std::to_string(l) + ")");
}

}  // namespace hypersym

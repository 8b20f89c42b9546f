#include "mzv/regularize.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "mzv/error.hpp"

namespace mzvkit {

RegPolynomial::RegPolynomial(std::vector<LinComb> coeffs) : coeffs_(std::move(coeffs))
{
    if (coeffs_.empty()) coeffs_.resize(1);
    for (const auto &c : coeffs_) {
        if (!c.in_h0()) {
            throw DomainError("RegPolynomial coefficients must lie in H^0");
        }
    }
    trim();
}

RegPolynomial RegPolynomial::monomial(LinComb c, unsigned n)
{
    std::vector<LinComb> coeffs(n + 1);
    coeffs[n] = std::move(c);
    return RegPolynomial(std::move(coeffs));
}

void RegPolynomial::trim()
{
    while (coeffs_.size() > 1 && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RegPolynomial &RegPolynomial::operator+=(const RegPolynomial &rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

RegPolynomial &RegPolynomial::operator-=(const RegPolynomial &rhs)
{
    if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

RegPolynomial &RegPolynomial::operator*=(const Rational &c)
{
    for (auto &coeff : coeffs_) coeff *= c;
    trim();
    return *this;
}

std::string RegPolynomial::serialize() const
{
    std::string out = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) out += ",";
        out += "[" + std::to_string(i) + "," + coeffs_[i].serialize() + "]";
    }
    return out + "]";
}

std::string RegPolynomial::pretty() const
{
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        if (coeffs_[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string power = i == 0 ? "" : (i == 1 ? "T" : "T^" + std::to_string(i));
        std::string c = coeffs_[i].pretty();
        if (power.empty()) {
            out += "(" + c + ")";
        } else if (coeffs_[i] == LinComb::unit()) {
            out += power;
        } else {
            out += "(" + c + ")*" + power;
        }
    }
    return out;
}

RegPolynomial multiply(Product kind, const RegPolynomial &p, const RegPolynomial &q)
{
    std::vector<LinComb> out(p.degree() + q.degree() + 1);
    for (unsigned i = 0; i <= p.degree(); ++i) {
        if (p.coefficient(i).is_zero()) continue;
        for (unsigned j = 0; j <= q.degree(); ++j) {
            out[i + j] += multiply(kind, p.coefficient(i), q.coefficient(j));
        }
    }
    return RegPolynomial(std::move(out));
}

namespace {

class DecomposeCache {
public:
    bool lookup(const Word &w, RegPolynomial &out) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find(w);
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }
    void store(const Word &w, const RegPolynomial &p)
    {
        std::unique_lock lock(mutex_);
        table_.insert_or_assign(w, p);
    }
    void clear()
    {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<Word, RegPolynomial, WordHash> table_;
};

DecomposeCache &decompose_cache(Product kind)
{
    static DecomposeCache star;
    static DecomposeCache sh;
    return kind == Product::harmonic ? star : sh;
}

Rational factorial(unsigned t)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), t);
    return Rational(f);
}

RegPolynomial decompose_word(Product kind, const Word &w);

RegPolynomial decompose_lincomb(Product kind, const LinComb &x)
{
    RegPolynomial out;
    for (const auto &[w, c] : x) {
        out += decompose_word(kind, w) * c;
    }
    return out;
}

// For w = v e1^t with v empty or ending in e0:
//   harmonic: v * e1^{*t}  = t! w + (trailing e1 count < t)
//   shuffle:  v sh e1^t    =    w + (trailing e1 count < t), and e1^{sh t} = t! e1^t
// Both are solved for w and the lower part is decomposed recursively.
RegPolynomial decompose_word(Product kind, const Word &w)
{
    unsigned t = w.trailing_e1();
    if (t == 0) return RegPolynomial::constant(LinComb(w));

    RegPolynomial memo;
    if (decompose_cache(kind).lookup(w, memo)) return memo;

    Word v = w;
    for (unsigned i = 0; i < t; ++i) v = v.drop_last();
    const LinComb e1(Word::block(1));
    Rational t_fact = factorial(t);

    RegPolynomial result;
    if (kind == Product::harmonic) {
        LinComb expanded = harmonic(LinComb(v), power(Product::harmonic, e1, t));
        LinComb lower = expanded - LinComb(w, t_fact);
        result = (RegPolynomial::monomial(LinComb(v), t) - decompose_lincomb(kind, lower)) * (1 / t_fact);
    } else {
        Word tail;
        for (unsigned i = 0; i < t; ++i) tail = tail.append(Letter::e1);
        LinComb lower = shuffle(v, tail) - LinComb(w);
        result = RegPolynomial::monomial(LinComb(v), t) * (1 / t_fact) - decompose_lincomb(kind, lower);
    }

    decompose_cache(kind).store(w, result);
    return result;
}

} // namespace

RegPolynomial decompose(Product kind, const LinComb &x)
{
    if (!x.in_h1()) {
        throw DomainError("regularization is defined on H^1 only");
    }
    return decompose_lincomb(kind, x);
}

RegPolynomial star_decompose(const LinComb &x)
{
    return decompose(Product::harmonic, x);
}

RegPolynomial shuffle_decompose(const LinComb &x)
{
    return decompose(Product::shuffle, x);
}

LinComb substitute_e1(Product kind, const RegPolynomial &p)
{
    const LinComb e1(Word::block(1));
    LinComb out;
    LinComb e1_power = LinComb::unit();
    for (unsigned i = 0; i <= p.degree(); ++i) {
        if (i > 0) e1_power = multiply(kind, e1_power, e1);
        out += multiply(kind, p.coefficient(i), e1_power);
    }
    return out;
}

LinComb regularize(Product kind, const LinComb &x)
{
    return decompose(kind, x).coefficient(0);
}

LinComb reg_star(const LinComb &x)
{
    return regularize(Product::harmonic, x);
}

LinComb reg_sh(const LinComb &x)
{
    return regularize(Product::shuffle, x);
}

RegPolynomial z_star_polynomial(const Index &k)
{
    return star_decompose(LinComb::of_index(k));
}

RegPolynomial z_sh_polynomial(const Index &k)
{
    return shuffle_decompose(LinComb::of_index(k));
}

namespace detail {

void clear_decompose_caches()
{
    decompose_cache(Product::harmonic).clear();
    decompose_cache(Product::shuffle).clear();
}

} // namespace detail

} // namespace mzvkit

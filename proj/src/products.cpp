#include "mzv/products.hpp"

#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include "mzv/error.hpp"

namespace mzvkit {

namespace {

struct PairHash {
    std::size_t operator()(const std::pair<Word, Word> &p) const noexcept
    {
        WordHash h;
        return h(p.first) * 31 + h(p.second);
    }
};

class ProductCache {
public:
    bool lookup(const Word &a, const Word &b, LinComb &out) const
    {
        std::shared_lock lock(mutex_);
        auto it = table_.find({a, b});
        if (it == table_.end()) return false;
        out = it->second;
        return true;
    }

    void store(const Word &a, const Word &b, const LinComb &value)
    {
        std::unique_lock lock(mutex_);
        table_.insert_or_assign({a, b}, value);
    }

    void clear()
    {
        std::unique_lock lock(mutex_);
        table_.clear();
    }

    std::size_t size() const
    {
        std::shared_lock lock(mutex_);
        return table_.size();
    }

private:
    mutable std::shared_mutex mutex_;
    std::unordered_map<std::pair<Word, Word>, LinComb, PairHash> table_;
};

ProductCache &cache(Product kind)
{
    static ProductCache harmonic_cache;
    static ProductCache shuffle_cache;
    return kind == Product::harmonic ? harmonic_cache : shuffle_cache;
}

LinComb harmonic_words(const Word &a, const Word &b)
{
    if (a.empty()) return LinComb(b);
    if (b.empty()) return LinComb(a);
    LinComb memo;
    if (cache(Product::harmonic).lookup(a, b, memo)) return memo;

    // w e_{k1} * w' e_{k2} = (w * w'e_{k2}) e_{k1} + (w e_{k1} * w') e_{k2} + (w * w') e_{k1+k2}
    auto [w, k1] = a.split_last_block();
    auto [wp, k2] = b.split_last_block();
    LinComb result = harmonic_words(w, b).concat_right(Word::block(k1));
    result += harmonic_words(a, wp).concat_right(Word::block(k2));
    result += harmonic_words(w, wp).concat_right(Word::block(k1 + k2));

    cache(Product::harmonic).store(a, b, result);
    return result;
}

LinComb shuffle_words(const Word &a, const Word &b)
{
    if (a.empty()) return LinComb(b);
    if (b.empty()) return LinComb(a);
    LinComb memo;
    if (cache(Product::shuffle).lookup(a, b, memo)) return memo;

    // w u1 sh w' u2 = (w sh w'u2) u1 + (w u1 sh w') u2
    Word u1 = Word().append(a.last());
    Word u2 = Word().append(b.last());
    LinComb result = shuffle_words(a.drop_last(), b).concat_right(u1);
    result += shuffle_words(a, b.drop_last()).concat_right(u2);

    cache(Product::shuffle).store(a, b, result);
    return result;
}

template <typename WordProduct>
LinComb bilinear(const LinComb &x, const LinComb &y, WordProduct &&product)
{
    LinComb out;
    for (const auto &[a, ca] : x) {
        for (const auto &[b, cb] : y) {
            Rational c = ca * cb;
            for (const auto &[w, cw] : product(a, b)) {
                out.add_term(w, c * cw);
            }
        }
    }
    return out;
}

} // namespace

LinComb harmonic(const Word &a, const Word &b)
{
    if (!a.in_h1() || !b.in_h1()) {
        throw DomainError("harmonic product is defined on H^1 only");
    }
    return harmonic_words(a, b);
}

LinComb harmonic(const LinComb &x, const LinComb &y)
{
    if (!x.in_h1() || !y.in_h1()) {
        throw DomainError("harmonic product is defined on H^1 only");
    }
    return bilinear(x, y, harmonic_words);
}

LinComb shuffle(const Word &a, const Word &b)
{
    return shuffle_words(a, b);
}

LinComb shuffle(const LinComb &x, const LinComb &y)
{
    return bilinear(x, y, shuffle_words);
}

LinComb multiply(Product kind, const LinComb &x, const LinComb &y)
{
    return kind == Product::harmonic ? harmonic(x, y) : shuffle(x, y);
}

LinComb power(Product kind, const LinComb &x, unsigned n)
{
    LinComb out = LinComb::unit();
    for (unsigned i = 0; i < n; ++i) out = multiply(kind, out, x);
    return out;
}

const char *to_string(Product kind)
{
    return kind == Product::harmonic ? "harmonic" : "shuffle";
}

namespace detail {

void clear_product_caches()
{
    cache(Product::harmonic).clear();
    cache(Product::shuffle).clear();
}

std::size_t product_cache_size(Product kind)
{
    return cache(kind).size();
}

void override_product_entry(Product kind, const Word &a, const Word &b, LinComb value)
{
    cache(kind).store(a, b, value);
}

} // namespace detail

} // namespace mzvkit

#include "mzv/index.hpp"

#include <charconv>
#include <numeric>

#include "mzv/error.hpp"

namespace mzvkit {

Index::Index(std::initializer_list<unsigned> parts) : Index(std::vector<unsigned>(parts)) {}

Index::Index(std::vector<unsigned> parts) : parts_(std::move(parts))
{
    for (unsigned k : parts_) {
        if (k == 0) {
            throw DomainError("index parts must be positive");
        }
    }
}

unsigned Index::weight() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

bool Index::admissible() const
{
    return parts_.empty() || parts_.back() >= 2;
}

std::string Index::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(parts_[i]);
    }
    return out;
}

Index Index::parse(std::string_view text)
{
    std::vector<unsigned> parts;
    if (text.empty()) {
        return Index();
    }
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        auto field = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
        unsigned value = 0;
        auto [end, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc() || end != field.data() + field.size() || value == 0) {
            throw DomainError("malformed index: '" + std::string(text) + "'");
        }
        parts.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return Index(std::move(parts));
}

namespace {

void compositions(unsigned remaining, std::vector<unsigned> &prefix, std::vector<Index> &out)
{
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (unsigned k = 1; k <= remaining; ++k) {
        prefix.push_back(k);
        compositions(remaining - k, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Index> indices_of_weight(unsigned weight)
{
    std::vector<Index> out;
    if (weight == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<unsigned> prefix;
    compositions(weight, prefix, out);
    return out;
}

std::vector<Index> indices_up_to_weight(unsigned max_weight)
{
    std::vector<Index> out;
    for (unsigned w = 1; w <= max_weight; ++w) {
        auto batch = indices_of_weight(w);
        out.insert(out.end(), batch.begin(), batch.end());
    }
    return out;
}

} // namespace mzvkit

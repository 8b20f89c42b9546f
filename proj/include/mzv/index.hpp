#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mzvkit {

// A tuple of positive integers (k_1, ..., k_r). The empty index addresses the unit.
class Index {
public:
    Index() = default;
    Index(std::initializer_list<unsigned> parts);
    explicit Index(std::vector<unsigned> parts);

    std::span<const unsigned> parts() const { return parts_; }
    unsigned operator[](std::size_t i) const { return parts_[i]; }
    std::size_t depth() const { return parts_.size(); }
    unsigned weight() const;
    bool empty() const { return parts_.empty(); }
    // r == 0 or k_r >= 2
    bool admissible() const;

    // "1,2"; the empty index prints as "".
    std::string to_string() const;
    static Index parse(std::string_view text);

    auto operator<=>(const Index &) const = default;
    bool operator==(const Index &) const = default;

private:
    std::vector<unsigned> parts_;
};

// All indices of the given exact weight, in lexicographic order of parts.
std::vector<Index> indices_of_weight(unsigned weight);
// All nonempty indices of weight 1..max_weight, grouped by weight.
std::vector<Index> indices_up_to_weight(unsigned max_weight);

} // namespace mzvkit

#pragma once

#include <compare>
#include <string>
#include <vector>

namespace rsinf {

// Young diagram given by its row lengths, weakly decreasing, all positive.
class Partition {
public:
    Partition() = default;
    // Trailing zeros are dropped; throws std::invalid_argument on negative
    // or increasing parts.
    explicit Partition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    bool empty() const { return parts_.empty(); }
    std::size_t length() const { return parts_.size(); }
    int size() const;
    // parts_[i] or 0 past the end, 0-based
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    Partition conjugate() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend std::strong_ordering operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

// All partitions of n, in reverse lexicographic order.
std::vector<Partition> partitions_of(int n);

}  // namespace rsinf

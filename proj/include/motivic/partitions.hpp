#ifndef MOTIVIC_PARTITIONS_HPP
#define MOTIVIC_PARTITIONS_HPP

#include <numeric>
#include <stdexcept>
#include <vector>

namespace motivic {

// Partition of n in multiplicity form: a tuple (k_1, ..., k_n) with
// sum i * k_i = n, where k_i counts the parts of size i. The weight n and
// the number of parts |k| = sum k_i are derived.
class Partition {
public:
    explicit Partition(std::vector<int> multiplicities)
        : multiplicities_(std::move(multiplicities)) {
        for (std::size_t i = 0; i < multiplicities_.size(); ++i) {
            if (multiplicities_[i] < 0) {
                throw std::invalid_argument("Partition: negative multiplicity");
            }
            weight_ += static_cast<int>(i + 1) * multiplicities_[i];
        }
    }

    int weight() const { return weight_; }

    // |k| = sum of multiplicities.
    int part_count() const {
        return std::accumulate(multiplicities_.begin(), multiplicities_.end(), 0);
    }

    // k_i for part size i >= 1; zero beyond the stored length.
    int multiplicity(int i) const {
        if (i < 1 || static_cast<std::size_t>(i) > multiplicities_.size()) {
            return 0;
        }
        return multiplicities_[static_cast<std::size_t>(i - 1)];
    }

    const std::vector<int>& multiplicities() const { return multiplicities_; }

    friend bool operator==(const Partition& a, const Partition& b) = default;

private:
    std::vector<int> multiplicities_;
    int weight_ = 0;
};

// All partitions of n in multiplicity form, each exactly once; the count is
// the partition number p(n). partitions(0) is the single empty partition.
inline std::vector<Partition> partitions(int n) {
    if (n < 0) {
        throw std::invalid_argument("partitions: negative n");
    }
    std::vector<Partition> all;
    std::vector<int> mult(static_cast<std::size_t>(n), 0);
    // Chooses k_i for i = n down to 1; `remaining` is the weight still to place.
    auto recurse = [&](auto&& self, int i, int remaining) -> void {
        if (i == 0) {
            if (remaining == 0) {
                all.emplace_back(mult);
            }
            return;
        }
        for (int k = 0; k * i <= remaining; ++k) {
            mult[static_cast<std::size_t>(i - 1)] = k;
            self(self, i - 1, remaining - k * i);
        }
        mult[static_cast<std::size_t>(i - 1)] = 0;
    };
    recurse(recurse, n, n);
    return all;
}

}  // namespace motivic

#endif  // MOTIVIC_PARTITIONS_HPP

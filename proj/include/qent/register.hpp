#pragma once

#include <cstddef>
#include <vector>

namespace qent {

/// Ordered list of per-site dimensions of a multi-qudit register.
///
/// Sites are 1-based and site 1 is the most significant digit of a basis-state
/// index, so the flat index of |i j ... k> is ((i*d2 + j)*d3 + ...) + k.
class QuditRegister {
public:
    explicit QuditRegister(std::vector<int> dims);

    static QuditRegister qubits(int n) { return uniform(n, 2); }
    static QuditRegister uniform(int n, int d);

    int sites() const { return static_cast<int>(dims_.size()); }
    int dim(int site) const;  // 1-based site label
    const std::vector<int>& dims() const { return dims_; }
    std::size_t total_dimension() const { return total_; }

    /// True when every site has the same local dimension.
    bool is_uniform() const;

    std::size_t index_of(const std::vector<int>& digits) const;
    std::vector<int> digits_of(std::size_t index) const;

    /// Product of dimensions of the sites strictly after `site` (the stride of
    /// that site's digit in the flat index).
    std::size_t stride(int site) const;

    /// Throws ShapeError unless `sites` is a nonempty list of distinct valid
    /// 1-based site labels.
    void check_subset(const std::vector<int>& sites) const;

    bool operator==(const QuditRegister&) const = default;

private:
    std::vector<int> dims_;
    std::size_t total_ = 1;
};

}  // namespace qent

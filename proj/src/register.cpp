#include "qent/register.hpp"

#include <algorithm>
#include <limits>

#include "qent/errors.hpp"

namespace qent {

QuditRegister::QuditRegister(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw ShapeError("register needs at least one site");
    for (int d : dims_) {
        if (d < 2) throw ShapeError("site dimension must be >= 2, got " + std::to_string(d));
        if (total_ > std::numeric_limits<std::size_t>::max() / static_cast<std::size_t>(d))
            throw ShapeError("register total dimension overflows");
        total_ *= static_cast<std::size_t>(d);
    }
}

QuditRegister QuditRegister::uniform(int n, int d) {
    if (n < 1) throw ShapeError("register needs at least one site");
    return QuditRegister(std::vector<int>(static_cast<std::size_t>(n), d));
}

int QuditRegister::dim(int site) const {
    if (site < 1 || site > sites())
        throw ShapeError("site " + std::to_string(site) + " out of range [1, " +
                         std::to_string(sites()) + "]");
    return dims_[static_cast<std::size_t>(site - 1)];
}

bool QuditRegister::is_uniform() const {
    return std::all_of(dims_.begin(), dims_.end(), [&](int d) { return d == dims_[0]; });
}

std::size_t QuditRegister::index_of(const std::vector<int>& digits) const {
    if (digits.size() != dims_.size())
        throw ShapeError("digit count " + std::to_string(digits.size()) +
                         " does not match register with " + std::to_string(sites()) + " sites");
    std::size_t idx = 0;
    for (std::size_t s = 0; s < dims_.size(); ++s) {
        if (digits[s] < 0 || digits[s] >= dims_[s])
            throw ShapeError("digit " + std::to_string(digits[s]) + " out of range for site " +
                             std::to_string(s + 1) + " of dimension " + std::to_string(dims_[s]));
        idx = idx * static_cast<std::size_t>(dims_[s]) + static_cast<std::size_t>(digits[s]);
    }
    return idx;
}

std::vector<int> QuditRegister::digits_of(std::size_t index) const {
    std::vector<int> digits(dims_.size());
    for (std::size_t s = dims_.size(); s-- > 0;) {
        digits[s] = static_cast<int>(index % static_cast<std::size_t>(dims_[s]));
        index /= static_cast<std::size_t>(dims_[s]);
    }
    return digits;
}

std::size_t QuditRegister::stride(int site) const {
    dim(site);  // range check
    std::size_t s = 1;
    for (std::size_t k = static_cast<std::size_t>(site); k < dims_.size(); ++k)
        s *= static_cast<std::size_t>(dims_[k]);
    return s;
}

void QuditRegister::check_subset(const std::vector<int>& sites) const {
    if (sites.empty()) throw ShapeError("site subset must be nonempty");
    std::vector<int> sorted = sites;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw ShapeError("site subset contains duplicates");
    for (int s : sites) dim(s);  // range check
}

}  // namespace qent

#include "morseconf/permutation.hpp"

#include <numeric>
#include <stdexcept>

namespace morseconf {

Permutation::Permutation(std::vector<int> images) : img_(std::move(images)) {
    std::vector<char> seen(img_.size(), 0);
    for (int v : img_) {
        if (v < 0 || v >= static_cast<int>(img_.size()) || seen[v])
            throw std::invalid_argument("permutation: images are not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(img_.size());
    for (int i = 0; i < n(); ++i) inv[img_[i]] = i;
    return Permutation(std::move(inv));
}

Permutation Permutation::sublevel_cycle(int n, int i, int j) {
    if (!(2 <= j && j <= i && i <= n))
        throw std::invalid_argument("sublevel cycle needs 2 <= j <= i <= n");
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    // 0-based support: positions n-i .. n-i+j-1
    int base = n - i;
    for (int k = 0; k < j - 1; ++k) img[base + k] = base + k + 1;
    img[base + j - 1] = base;
    return Permutation(std::move(img));
}

std::string Permutation::word() const {
    std::string out;
    for (int i = 0; i < n(); ++i) {
        if (i && n() > 10) out += ',';
        out += std::to_string(img_[i]);
    }
    return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.n() != b.n())
        throw std::invalid_argument("permutation product: size mismatch");
    std::vector<int> img(a.n());
    for (int x = 0; x < a.n(); ++x) img[x] = a.apply(b.apply(x));
    return Permutation(std::move(img));
}

}  // namespace morseconf

#ifndef MORSECONF_PERMUTATION_HPP
#define MORSECONF_PERMUTATION_HPP

#include <compare>
#include <string>
#include <vector>

namespace morseconf {

/// Permutation of {1..n}, stored 0-based: img_[i] = sigma(i+1) - 1.
/// Critical 0-cells (a_1,...,a_n) correspond to sigma(i) = a_i + 1, so the
/// stored images are exactly the cell entries.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);

    int n() const { return static_cast<int>(img_.size()); }
    int apply(int x) const { return img_[x]; }  // 0-based
    const std::vector<int>& images() const { return img_; }

    Permutation inverse() const;

    /// Cycle n-i+1 -> n-i+2 -> ... -> n-i+j -> n-i+1 (1-based values).
    static Permutation sublevel_cycle(int n, int i, int j);

    /// One-line word of the corresponding critical 0-cell entries,
    /// e.g. "2013"; comma-separated once n > 10.
    std::string word() const;

    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> img_;
};

/// Composition (a*b)(x) = a(b(x)); with the right cell action this gives
/// act(act(c,a),b) == act(c, a*b).
Permutation operator*(const Permutation& a, const Permutation& b);

}  // namespace morseconf

#endif

#include "morseconf/counting.hpp"

#include <functional>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace morseconf {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    long long result = 1;
    for (int t = 1; t <= k; ++t) {
        long long num = n - k + t;
        // keep intermediates integral: result * num is divisible by t here
        long long g = std::gcd(result, (long long)t);
        long long r2 = result / g, t2 = t / g;
        long long g2 = std::gcd(num, t2);
        num /= g2;
        t2 /= g2;
        if (t2 != 1) throw std::logic_error("binomial: non-integral step");
        if (r2 > 0 && num > (long long)4e18 / r2)
            throw std::overflow_error("binomial overflow");
        result = r2 * num;
    }
    return result;
}

long long m_r(const PlaneTree& tree, int r) {
    if (r < 1) throw std::invalid_argument("m_r: r >= 1 required");
    long long total = 0;
    for (int v = 0; v < tree.vertex_count(); ++v) {
        int d = tree.degree(v);
        if (d > r) total += binomial(d - 1, r);
    }
    return total;
}

long long predicted_multiplicity(int i, int j, const PlaneTree& tree) {
    if (!(2 <= j && j <= i))
        throw std::invalid_argument("predicted_multiplicity: 2 <= j <= i required");
    long long total = 0;
    for (int l = 2; l <= i; ++l) total += binomial(i - 2, l - 2) * m_r(tree, l);
    return total;
}

long long predicted_total_edges(const PlaneTree& tree, int n) {
    long long factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    long long sum = 0;
    for (int i = 2; i <= n; ++i)
        for (int l = 2; l <= i; ++l)
            sum += (i - 1) * binomial(i - 2, l - 2) * m_r(tree, l);
    return factorial * sum;
}

CensusTable census(const PlaneTree& tree, int n) {
    if (n < 2) throw std::invalid_argument("census: n >= 2 required");
    long long factorial = 1;
    for (int k = 2; k <= n; ++k) factorial *= k;
    CensusTable table;
    for (int i = 2; i <= n; ++i) {
        for (int j = 2; j <= i; ++j) {
            CensusRow row;
            row.i = i;
            row.j = j;
            row.multiplicity = predicted_multiplicity(i, j, tree);
            row.orbits = row.multiplicity;
            row.cycles_per_orbit = factorial / j;
            row.edges = factorial * row.multiplicity;
            table.total += row.edges;
            table.rows.push_back(row);
        }
    }
    return table;
}

namespace {

void compositions_rec(int r, int s, std::vector<int>& acc,
                      const std::function<void(const std::vector<int>&)>& fn) {
    if (s == 1) {
        if (r >= 1) {
            acc.push_back(r);
            fn(acc);
            acc.pop_back();
        }
        return;
    }
    for (int first = 1; first <= r - (s - 1); ++first) {
        acc.push_back(first);
        compositions_rec(r - first, s - 1, acc, fn);
        acc.pop_back();
    }
}

}  // namespace

long long count_balls(int f, int r, int s) {
    if (!(r >= s && s >= 2 && r > f && f > 0))
        throw std::invalid_argument("count_balls: need r >= s >= 2, r > f > 0");
    long long hits = 0;
    std::vector<int> acc;
    std::function<void(const std::vector<int>&)> fn =
        [&](const std::vector<int>& parts) {
            int prefix = 0;
            for (size_t k = 0; k + 1 < parts.size(); ++k) {
                prefix += parts[k];
                if (prefix == f) {
                    ++hits;
                    return;
                }
                if (prefix > f) return;
            }
        };
    compositions_rec(r, s, acc, fn);
    return hits;
}

long long count_balls_closed(int f, int r, int s) {
    if (!(r >= s && s >= 2 && r > f && f > 0))
        throw std::invalid_argument("count_balls_closed: need r >= s >= 2, r > f > 0");
    return binomial(r - 2, s - 2);
}

bool vandermonde_selfcheck(int r_max) {
    for (int r = 2; r <= r_max; ++r) {
        for (int s = 2; s <= r; ++s) {
            // stars-and-bars: compositions of r into s positive parts
            long long comps = 0;
            std::vector<int> acc;
            std::function<void(const std::vector<int>&)> fn =
                [&](const std::vector<int>&) { ++comps; };
            compositions_rec(r, s, acc, fn);
            if (comps != binomial(r - 1, s - 1)) return false;
            for (int f = 1; f < r; ++f)
                if (count_balls(f, r, s) != count_balls_closed(f, r, s)) return false;
        }
    }
    return true;
}

}  // namespace morseconf

#include "jacklab/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace jacklab {

Series series_multiply(const Series& a, const Series& b, std::size_t order) {
    Series c(order + 1, Rational(0));
    for (std::size_t i = 0; i < a.size() && i <= order; ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size() && i + j <= order; ++j) c[i + j] += a[i] * b[j];
    }
    return c;
}

Series series_exp(const Series& a, std::size_t order) {
    if (!a.empty() && a[0] != 0) throw std::invalid_argument("series_exp: constant term must vanish");
    // e' = a' e  =>  n e_n = sum_{k=1}^n k a_k e_{n-k}
    Series e(order + 1, Rational(0));
    e[0] = 1;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational s = 0;
        for (std::size_t k = 1; k <= n && k < a.size(); ++k) s += a[k] * static_cast<long>(k) * e[n - k];
        e[n] = s / static_cast<long>(n);
    }
    return e;
}

namespace {

void set_partitions_rec(int i, int n, SetPartition& current, std::vector<SetPartition>& out) {
    if (i == n) {
        out.push_back(current);
        return;
    }
    // Index loop: the recursion appends to `current`, which may reallocate.
    for (std::size_t b = 0; b < current.size(); ++b) {
        current[b].push_back(i);
        set_partitions_rec(i + 1, n, current, out);
        current[b].pop_back();
    }
    current.push_back({i});
    set_partitions_rec(i + 1, n, current, out);
    current.pop_back();
}

}  // namespace

std::vector<SetPartition> set_partitions(int n) {
    std::vector<SetPartition> out;
    SetPartition current;
    set_partitions_rec(0, n, current, out);
    return out;
}

std::vector<CumulantTerm> cumulant_terms(int n) {
    std::vector<CumulantTerm> out;
    for (auto& pi : set_partitions(n)) {
        const long k = static_cast<long>(pi.size());
        long c = (k % 2 == 1) ? 1 : -1;
        for (long j = 2; j < k; ++j) c *= j;
        out.push_back({c, std::move(pi)});
    }
    return out;
}

}  // namespace jacklab

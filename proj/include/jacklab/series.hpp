#pragma once

#include "jacklab/rational.hpp"

#include <cstddef>
#include <vector>

namespace jacklab {

// Truncated power series with exact coefficients; index = power.
using Series = std::vector<Rational>;

Series series_multiply(const Series& a, const Series& b, std::size_t order);
// exp(a) truncated at `order`; requires a[0] == 0.
Series series_exp(const Series& a, std::size_t order);

// Set partitions of {0, ..., n-1}; each block lists its elements in increasing order.
using SetPartition = std::vector<std::vector<int>>;
std::vector<SetPartition> set_partitions(int n);

// Moment-to-cumulant expansion: kappa = sum over (coefficient, pi) of coefficient * prod_B moment(B),
// with coefficient (|pi|-1)! (-1)^{|pi|-1}.
struct CumulantTerm {
    long coefficient;
    SetPartition blocks;
};
std::vector<CumulantTerm> cumulant_terms(int n);

}  // namespace jacklab

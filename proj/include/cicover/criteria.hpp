#pragma once

#include <vector>

namespace cicover::detail {

// Allocation-free criterion cores shared by the classifier (which additionally
// builds certificates) and the enumeration/verification sweeps, where they run
// tens of millions of times. Inputs: d and twists sorted nondecreasing,
// nonempty, entries >= 1. A dedicated test pins these against the
// certificate-building variants on randomized configurations.

bool degree_preserved(const std::vector<int>& d, const std::vector<int>& twists);
bool birational(const std::vector<int>& d, const std::vector<int>& twists);
bool embedding_a(const std::vector<int>& d, const std::vector<int>& twists);
bool embedding_b(const std::vector<int>& d, const std::vector<int>& twists, long long N);
bool halving(const std::vector<int>& d, const std::vector<int>& outer_twists, int inner_l);

}  // namespace cicover::detail

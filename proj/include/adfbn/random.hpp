#pragma once

#include <cstdint>
#include <random>

#include "adfbn/dung.hpp"
#include "adfbn/framework.hpp"

namespace adfbn {

using Rng = std::mt19937_64;

/// Arguments named a0, a1, ...
Signature numbered_signature(std::size_t n, std::string_view prefix = "a");

/// Each ordered pair (self-attacks included) is an attack with probability p.
DungFramework random_dung(std::size_t n, double p, Rng& rng);

/// Random function of the given variables as a sum of its true minterms.
Formula random_function(const std::vector<std::size_t>& vars, Rng& rng);

/// Random formula tree over `vars` using every connective.
Formula random_formula(const std::vector<std::size_t>& vars, unsigned depth, Rng& rng);

/// Each argument gets 0..max_indegree random parents (self-loops allowed)
/// and a random function of them; unused parents are pruned.
Framework random_framework(std::size_t n, std::size_t max_indegree, Rng& rng);
/// Every argument samples exactly `indegree` distinct parents before pruning.
Framework random_fixed_indegree_framework(std::size_t n, std::size_t indegree, Rng& rng);

}  // namespace adfbn

#pragma once

#include <string>
#include <vector>

#include "bhdpc/instance.hpp"
#include "bhdpc/paths.hpp"

namespace bhdpc {

// Full audit of a candidate cover: endpoint agreement, per-path simplicity
// and adjacency, disjointness, total coverage of all 4^n vertices, and fault
// avoidance. Returns every violation found, not just the first; empty means
// the candidate is a valid cover for the instance.
std::vector<std::string> verify_dpc(const Instance& inst, const Dpc2& cand);

inline bool verified(const Instance& inst, const Dpc2& cand) {
    return verify_dpc(inst, cand).empty();
}

}  // namespace bhdpc

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bhdpc/instance.hpp"
#include "bhdpc/paths.hpp"

// Ground truth for small orders: an exhaustive two-path-partition search, a
// structural infeasibility certificate, the worst-case 2n-2-fault blocking
// construction, and standalone graph-property probes.

namespace bhdpc {

enum class OracleStatus { Exists, NotExists, Timeout };

struct OracleResult {
    OracleStatus status = OracleStatus::Timeout;
    Dpc2 dpc;  // populated when status == Exists
    long long expansions = 0;

    bool exists() const { return status == OracleStatus::Exists; }
};

// Complete search: enumerates s1->t1 paths in lexicographic order and, for
// each, asks for a spanning s2->t2 path of the complement. NotExists is
// reported only after exhausting the space. Sound pruning only (vertex
// availability degrees and residual connectivity), so no cover is missed.
// budget < 0 means default_search_budget().
OracleResult brute_force_dpc(const Instance& inst, long long budget = -1);

struct Certificate {
    enum class Kind { BlockedVertex, ExhaustedSearch };
    Kind kind = Kind::BlockedVertex;
    Vertex witness;
    std::vector<Edge> free_edges;  // the <= 2 fault-free edges at the witness
    bool into_sources = false;     // they lead into {s1,s2} (else {t1,t2})

    std::string describe() const;
};

// Fires when some non-terminal vertex keeps at most two fault-free edges and
// all of them lead into a single endpoint pair. Such a vertex can be neither
// interior to a path (its two path edges would both join endpoints of
// different paths) nor a path end (those are terminals), so no cover exists.
// Sound, deliberately not complete.
std::optional<Certificate> infeasibility_certificate(const Instance& inst);

// The worst-case blocking instance: s2 = twin(s1) and every edge at a common
// neighbor w except s1w, s2w is faulty, giving |F| = 2n-2, one beyond the
// tolerated budget. Throws InputError unless w is adjacent to s1.
Instance counterexample_instance(int n, const Vertex& s1, const Vertex& w, const Vertex& t1,
                                 const Vertex& t2);

struct ProbeReport {
    int pairs_checked = 0;   // path-length realizability over vertex pairs
    int edges_checked = 0;   // ring-of-subcubes 8-cycles per edge
    std::vector<std::string> failures;

    bool ok() const { return failures.empty(); }
};

// (i) n = 2: every vertex pair realizes every admissible path length
// (d(u,v) <= l <= 15, l = d mod 2).
// (ii) n in {2,3}: every edge lies on an 8-cycle using exactly one edge
// inside each of the four last-dimension subcubes.
ProbeReport property_probes(int n);

}  // namespace bhdpc

#pragma once

#include <array>

#include "bhdpc/errors.hpp"
#include "bhdpc/topology.hpp"

// The 16 vertices of the order-2 cube arrange into a ring of eight 4-cycles,
// alternating inner-dimension cycles and twisted outer-dimension cycles;
// consecutive cells overlap in a twin pair (a cell diagonal). joints[i] is
// the pair shared by cells i and i+1 (mod 8), listed clockwise, and every
// vertex lies in exactly one joint. Each cell is the complete bipartite graph
// between its two joints, which is what the tenon-chain gadgets build on.

namespace bhdpc::detail {

struct RingBh2 {
    std::array<std::array<Vertex, 2>, 8> joints;
    std::array<int, 16> joint_of;

    static const RingBh2& get() {
        static const RingBh2 ring;
        return ring;
    }

  private:
    RingBh2() {
        auto J = [](Coord a, Coord b, Coord c, Coord d) {
            return std::array<Vertex, 2>{Vertex{{a, b}}, Vertex{{c, d}}};
        };
        joints = {J(1, 0, 3, 0), J(0, 3, 2, 3), J(1, 3, 3, 3), J(0, 2, 2, 2),
                  J(1, 2, 3, 2), J(0, 1, 2, 1), J(1, 1, 3, 1), J(0, 0, 2, 0)};
        joint_of.fill(-1);
        for (int i = 0; i < 8; i++) {
            for (const Vertex& v : joints[i]) joint_of[vertex_id(v)] = i;
            if (twin(joints[i][0]) != joints[i][1])
                throw InternalError("ring joint is not a twin pair");
            for (const Vertex& v : joints[i])
                for (const Vertex& w : joints[(i + 1) % 8])
                    if (!adjacent(v, w)) throw InternalError("ring joints not fully linked");
        }
        for (int id = 0; id < 16; id++)
            if (joint_of[id] < 0) throw InternalError("ring misses a vertex");
    }
};

}  // namespace bhdpc::detail

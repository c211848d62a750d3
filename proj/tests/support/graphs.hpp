#pragma once

#include "p7c5/graph.hpp"

namespace p7c5::testgen {

inline Graph petersen() {
    return Graph::build(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                             {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
                             {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}});
}

} // namespace p7c5::testgen

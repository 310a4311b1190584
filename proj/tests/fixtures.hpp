#pragma once

#include "singraph/graph.hpp"

#include <map>
#include <string>

namespace fixtures {

// Graphs obtained by gluing two or three diamonds at vertices, transcribed
// from drawings (vertex numbering follows the drawing's point list).
inline auto diamond_pairs() -> std::map<std::string, sg::Graph> {
    return {
        {"a", sg::Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {4, 6}, {5, 6}})},
        {"b", sg::Graph(7, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {4, 5}, {4, 6}, {5, 6}})},
        {"c", sg::Graph(7, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}, {4, 6}, {5, 6}})},
    };
}

inline auto diamond_triples() -> std::map<std::string, sg::Graph> {
    return {
        {"a", sg::Graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {4, 6}, {5, 6}, {6, 7}, {6, 8}, {6, 9}, {7, 9}, {8, 9}})},
        {"b", sg::Graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {4, 6}, {5, 6}, {6, 7}, {6, 8}, {7, 8}, {7, 9}, {8, 9}})},
        {"c", sg::Graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {4, 5}, {4, 6}, {5, 6}, {6, 7}, {6, 8}, {6, 9}, {7, 9}, {8, 9}})},
        {"d", sg::Graph(10, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {4, 6}, {5, 6}, {6, 7}, {6, 8}, {7, 8}, {7, 9}, {8, 9}})},
        {"e", sg::Graph(10, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {6, 7}, {6, 8}, {6, 9}, {7, 9}, {8, 9}})},
        {"f", sg::Graph(10, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}, {4, 6}, {5, 6}, {6, 7}, {6, 8}, {7, 8}, {7, 9}, {8, 9}})},
        {"g", sg::Graph(10, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {6, 8}, {7, 8}, {7, 9}, {8, 9}})},
        {"h", sg::Graph(10, {{0, 1}, {0, 3}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {6, 8}, {6, 9}, {7, 9}, {8, 9}})},
        {"i", sg::Graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {6, 8}, {6, 9}, {7, 9}, {8, 9}})},
        {"j", sg::Graph(10, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 4}, {1, 5}, {1, 6}, {2, 3}, {4, 5}, {5, 6}, {6, 7}, {6, 8}, {7, 8}, {7, 9}, {8, 9}})},
        {"k", sg::Graph(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {0, 7}, {0, 8}, {0, 9}, {1, 5}, {2, 6}, {3, 5}, {4, 6}, {7, 9}, {8, 9}})},
        {"l", sg::Graph(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 7}, {0, 8}, {0, 9}, {1, 5}, {2, 4}, {2, 6}, {3, 5}, {4, 6}, {7, 9}, {8, 9}})},
        {"m", sg::Graph(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 7}, {0, 8}, {0, 9}, {1, 3}, {1, 5}, {2, 4}, {2, 6}, {3, 5}, {4, 6}, {7, 9}, {8, 9}})},
        {"n", sg::Graph(10, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 7}, {0, 8}, {1, 3}, {1, 5}, {2, 4}, {2, 6}, {3, 5}, {4, 6}, {7, 8}, {7, 9}, {8, 9}})},
    };
}

}  // namespace fixtures

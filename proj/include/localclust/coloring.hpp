#pragma once

#include <cstdint>
#include <vector>

namespace localclust {

// Hash family over [universe] -> [k*k] in which every k-subset of the
// universe is mapped injectively by some member. When the universe already
// fits in [k*k] the identity is such a member on its own; otherwise we use
// multipliers modulo a prime above the universe.
struct SplitterFamily {
    int universe = 0;
    int k = 0;
    int range = 0;
    uint64_t prime = 0;
    std::vector<uint64_t> multipliers;  // empty means the identity family

    size_t size() const { return multipliers.empty() ? 1 : multipliers.size(); }
    int eval(size_t func, int x) const;
};

SplitterFamily make_splitter(int universe, int k);

struct ColoringConfig {
    enum class Mode { Deterministic, Randomized };
    Mode mode = Mode::Deterministic;
    uint64_t seed = 0;
    double delta = 0.01;  // randomized mode failure bound per hidden subset
};

// Colorings of [universe] with colors 0..k-1 such that every k-subset gets k
// distinct colors under some member. Deterministic mode composes the splitter
// with the k-subsets of its image; randomized mode draws enough uniform
// colorings to miss a fixed subset with probability at most delta.
std::vector<std::vector<int>> make_color_family(int universe, int k,
                                                const ColoringConfig& cfg);

}  // namespace localclust

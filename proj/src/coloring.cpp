#include "localclust/coloring.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>

namespace localclust {

namespace {

bool is_prime(uint64_t x) {
    if (x < 2) return false;
    for (uint64_t d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

uint64_t next_prime(uint64_t x) {
    while (!is_prime(x)) ++x;
    return x;
}

void subsets_of_size(const std::vector<int>& pool, int want,
                     const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> cur;
    std::function<void(size_t)> rec = [&](size_t at) {
        if (static_cast<int>(cur.size()) == want) {
            emit(cur);
            return;
        }
        if (pool.size() - at < want - cur.size()) return;
        for (size_t i = at; i < pool.size(); ++i) {
            cur.push_back(pool[i]);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

}  // namespace

int SplitterFamily::eval(size_t func, int x) const {
    if (x < 0 || x >= universe) throw std::out_of_range("splitter input out of range");
    if (multipliers.empty()) return x;
    uint64_t a = multipliers[func];
    return static_cast<int>((a * static_cast<uint64_t>(x) % prime) % static_cast<uint64_t>(range));
}

SplitterFamily make_splitter(int universe, int k) {
    if (universe < 0 || k < 0) throw std::invalid_argument("splitter parameters must be nonnegative");
    SplitterFamily f;
    f.universe = universe;
    f.k = k;
    f.range = std::max(1, k * k);
    if (universe <= f.range) return f;  // identity is injective everywhere
    f.prime = next_prime(static_cast<uint64_t>(universe) + 1);
    f.multipliers.resize(f.prime - 1);
    for (uint64_t a = 1; a < f.prime; ++a) f.multipliers[a - 1] = a;
    return f;
}

std::vector<std::vector<int>> make_color_family(int universe, int k,
                                                const ColoringConfig& cfg) {
    if (k < 0) throw std::invalid_argument("color count must be nonnegative");
    if (universe == 0) return {std::vector<int>{}};
    if (k == 0) return {};
    if (universe <= k) {
        std::vector<int> ident(universe);
        for (int i = 0; i < universe; ++i) ident[i] = i;
        return {ident};
    }

    if (cfg.mode == ColoringConfig::Mode::Randomized) {
        double miss = 1.0;
        for (int i = 1; i < k; ++i) miss *= 1.0 - static_cast<double>(i) / k;
        // miss is the probability a fixed k-subset comes out rainbow.
        size_t trials = static_cast<size_t>(std::ceil(std::log(1.0 / cfg.delta) / miss));
        std::mt19937_64 rng(cfg.seed);
        std::uniform_int_distribution<int> dist(0, k - 1);
        std::vector<std::vector<int>> fam(trials, std::vector<int>(universe));
        for (auto& coloring : fam)
            for (auto& c : coloring) c = dist(rng);
        return fam;
    }

    SplitterFamily spl = make_splitter(universe, k);
    std::vector<std::vector<int>> fam;
    std::set<std::vector<int>> seen;
    for (size_t fi = 0; fi < spl.size(); ++fi) {
        std::set<int> image;
        for (int x = 0; x < universe; ++x) image.insert(spl.eval(fi, x));
        if (static_cast<int>(image.size()) < k) continue;
        std::vector<int> img(image.begin(), image.end());
        // Only slot subsets inside the image can matter: the hidden k-subset
        // maps into the image, and its slots must be exactly the chosen ones.
        subsets_of_size(img, k, [&](const std::vector<int>& slots) {
            std::vector<int> coloring(universe);
            for (int x = 0; x < universe; ++x) {
                int y = spl.eval(fi, x);
                auto it = std::lower_bound(slots.begin(), slots.end(), y);
                if (it != slots.end() && *it == y)
                    coloring[x] = static_cast<int>(it - slots.begin());
                else
                    coloring[x] = 0;
            }
            if (seen.insert(coloring).second) fam.push_back(coloring);
        });
    }
    return fam;
}

}  // namespace localclust

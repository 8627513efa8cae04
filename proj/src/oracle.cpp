#include "equilist/oracle.hpp"

#include <algorithm>
#include <map>

namespace equilist {

namespace {

struct Search {
    const Instance& inst;
    std::vector<Vertex> order;
    std::vector<Color> palette;
    std::map<Color, int> size;
    std::map<Color, int> group; // colors with identical list-membership patterns
    std::vector<Color> color;
    int cap = 0;
    int allowed = 0;
    int full = 0;
    long long budget = 0;
    long long nodes = 0;
    bool out_of_budget = false;

    explicit Search(const Instance& in) : inst(in), color(in.g.n, -1) {}

    bool conflict(Vertex v, Color c) const
    {
        for (Vertex w : inst.g.adj[v])
            if (color[w] == c)
                return true;
        return false;
    }

    bool recurse(size_t idx)
    {
        if (idx == order.size())
            return true;
        Vertex v = order[idx];
        for (Color c : inst.lists[v]) {
            int sz = size[c];
            if (sz == cap)
                continue;
            if (sz == cap - 1 && full == allowed)
                continue;
            if (conflict(v, c))
                continue;
            if (sz == 0) {
                // Interchangeable empty classes: only try the smallest one.
                bool skip = false;
                for (const auto& [c2, g2] : group) {
                    if (c2 >= c)
                        break;
                    if (g2 == group.at(c) && size.at(c2) == 0) {
                        skip = true;
                        break;
                    }
                }
                if (skip)
                    continue;
            }
            if (++nodes > budget) {
                out_of_budget = true;
                return false;
            }
            color[v] = c;
            ++size[c];
            if (size[c] == cap)
                ++full;
            if (recurse(idx + 1))
                return true;
            if (size[c] == cap)
                --full;
            --size[c];
            color[v] = -1;
            if (out_of_budget)
                return false;
        }
        return false;
    }
};

} // namespace

OracleResult oracle_se_color(const Instance& inst, long long budget)
{
    inst.validate();
    OracleResult res;
    int n = inst.g.n;
    if (n == 0) {
        res.outcome = OracleResult::Outcome::Found;
        return res;
    }

    Search s(inst);
    s.budget = budget;
    s.palette = inst.palette();
    s.cap = (n + inst.r - 1) / inst.r;
    s.allowed = mod_star(n, inst.r);
    for (Color c : s.palette)
        s.size[c] = 0;

    // Group colors by which lists contain them.
    std::map<std::vector<char>, int> patterns;
    for (Color c : s.palette) {
        std::vector<char> pat(n, 0);
        for (Vertex v = 0; v < n; ++v)
            pat[v] = inst.list_has(v, c) ? 1 : 0;
        auto [it, fresh] = patterns.emplace(std::move(pat), static_cast<int>(patterns.size()));
        s.group[c] = it->second;
    }

    for (Vertex v = 0; v < n; ++v)
        s.order.push_back(v);
    std::stable_sort(s.order.begin(), s.order.end(), [&](Vertex a, Vertex b) {
        return inst.g.degree(a) > inst.g.degree(b);
    });

    bool found = s.recurse(0);
    res.nodes = s.nodes;
    if (found) {
        res.outcome = OracleResult::Outcome::Found;
        res.coloring = Coloring{s.color};
    } else if (s.out_of_budget) {
        res.outcome = OracleResult::Outcome::BudgetExceeded;
    } else {
        res.outcome = OracleResult::Outcome::NoneExists;
    }
    return res;
}

} // namespace equilist

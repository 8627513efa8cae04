// Acceptance gate: one pass/fail line per criterion, exit 0 only if all pass.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "equilist/errors.hpp"
#include "equilist/generators.hpp"
#include "equilist/graph.hpp"
#include "equilist/oracle.hpp"
#include "equilist/solver.hpp"
#include "equilist/trace.hpp"

using namespace equilist;
using Clock = std::chrono::steady_clock;

namespace {

int g_invariant_violations = 0;

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

Instance plain_instance(Graph g, int r)
{
    Instance inst;
    inst.g = std::move(g);
    inst.r = r;
    std::vector<Color> all(r);
    for (int c = 0; c < r; ++c)
        all[c] = c;
    inst.lists.assign(inst.g.n, all);
    return inst;
}

bool connected(const Graph& g)
{
    if (g.n == 0)
        return true;
    std::vector<char> seen(g.n, 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.adj[u])
            if (!seen[v]) {
                seen[v] = 1;
                ++count;
                stack.push_back(v);
            }
    }
    return count == g.n;
}

struct CorpusResult {
    int solved = 0;
    int total = 0;
    bool steps_ok = true;
    long long max_steps = 0;
    double elapsed = 0;
};

// Criteria 1, 5 and 6 share this corpus: seeded stacked triangulations with
// and without edge deletion, list budgets between Delta-tight and +3, lists
// drawn from a palette twice the budget.
CorpusResult run_random_corpus(int count)
{
    CorpusResult res;
    auto t0 = Clock::now();
    for (int i = 0; i < count; ++i) {
        std::uint64_t seed = 1000 + static_cast<std::uint64_t>(i);
        int n = 10 + static_cast<int>((seed * 37) % 191);
        double frac = i % 2 == 0 ? 0.0 : 0.2;
        auto [g, cert] = gen_stacked_planar(n, seed, frac);
        int r = std::max(9, g.max_degree()) + i % 4;
        Instance inst;
        inst.g = std::move(g);
        inst.r = r;
        inst.lists = gen_lists(n, r, 2 * r, seed + 1);
        ++res.total;
        try {
            SolveStats stats;
            Coloring c = se_color(inst, nullptr, &stats);
            if (check_SE(inst, c).valid)
                ++res.solved;
            res.max_steps = std::max(res.max_steps, stats.max_improve_steps_per_insertion);
            if (stats.max_improve_steps_per_insertion > static_cast<long long>(n) * r)
                res.steps_ok = false;
        } catch (const Error& e) {
            if (e.kind == ErrKind::InternalInvariantViolation)
                ++g_invariant_violations;
        }
    }
    res.elapsed = seconds_since(t0);
    return res;
}

bool criterion1(const CorpusResult& corpus, std::string& detail)
{
    char buf[160];
    std::snprintf(buf, sizeof buf, "%d/%d random planar instances solved and verified in %.1fs",
                  corpus.solved, corpus.total, corpus.elapsed);
    detail = buf;
    return corpus.solved == corpus.total && corpus.total == 500 && corpus.elapsed < 60.0;
}

bool criterion2(std::string& detail)
{
    auto t0 = Clock::now();
    int done = 0, target = 200;
    std::uint64_t seed = 1;
    while (done < target && seconds_since(t0) < 30.0) {
        int n = 3 + static_cast<int>(seed % 6);
        double frac = seed % 2 == 0 ? 0.25 : 0.0;
        auto [g, cert] = gen_stacked_planar(n, seed, frac);
        ++seed;
        if (!connected(g))
            continue;
        Graph g2 = g;
        Instance plain = plain_instance(std::move(g), 9);
        Instance random;
        random.g = std::move(g2);
        random.r = 9;
        random.lists = gen_lists(n, 9, 18, seed);
        for (const Instance* inst : {&plain, &random}) {
            Coloring c;
            try {
                c = se_color(*inst);
            } catch (const Error& e) {
                if (e.kind == ErrKind::InternalInvariantViolation)
                    ++g_invariant_violations;
                detail = "solver failed on a small connected planar graph";
                return false;
            }
            if (!check_SE(*inst, c).valid) {
                detail = "solver output failed verification";
                return false;
            }
            if (oracle_se_color(*inst).outcome != OracleResult::Outcome::Found) {
                detail = "oracle disagreed on feasibility";
                return false;
            }
        }
        ++done;
    }
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "%d connected planar graphs (n<=8) solved, verified and oracle-confirmed "
                  "with plain and random lists in %.1fs",
                  done, seconds_since(t0));
    detail = buf;
    return done == target;
}

bool criterion3(std::string& detail)
{
    int checked = 0;
    for (int i = 0; i < 100; ++i) {
        std::uint64_t seed = 9000 + static_cast<std::uint64_t>(i);
        int n = 10 + static_cast<int>((seed * 13) % 150);
        auto [g, cert] = gen_stacked_planar(n, seed, i % 2 == 0 ? 0.0 : 0.2);
        int r = std::max(9, g.max_degree());
        Instance inst = plain_instance(std::move(g), r);
        Coloring c;
        try {
            c = se_color(inst);
        } catch (const Error& e) {
            if (e.kind == ErrKind::InternalInvariantViolation)
                ++g_invariant_violations;
            detail = "solver failed on a plain-list instance";
            return false;
        }
        if (!check_SE(inst, c).valid) {
            detail = "plain-list output failed verification";
            return false;
        }
        std::vector<int> sizes(r, 0);
        for (Color col : c.color)
            ++sizes[col];
        int lo = n / r, hi = (n + r - 1) / r;
        for (int s : sizes)
            if (s != lo && s != hi) {
                detail = "a class size fell outside the equitable band";
                return false;
            }
        ++checked;
    }
    detail = std::to_string(checked) +
             " plain-list colorings have class sizes in {floor(n/r), ceil(n/r)}";
    return checked == 100;
}

bool criterion4(std::string& detail)
{
    Graph k33(6);
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 3; v < 6; ++v)
            k33.add_edge(u, v);
    Instance inst = plain_instance(k33, 3);
    if (oracle_se_color(inst).outcome != OracleResult::Outcome::NoneExists) {
        detail = "oracle found a coloring that should not exist";
        return false;
    }
    auto mem = verify_class_B(k33);
    if (mem.verdict != BMembership::Verdict::NotInB) {
        detail = "cross-edge certificate missed the violation";
        return false;
    }
    long long cut = cut_edges(k33, mem.witness_x, mem.witness_y);
    long long bound =
        2 * static_cast<long long>(mem.witness_x.size() + mem.witness_y.size()) - 4;
    if (cut <= bound) {
        detail = "reported witness does not violate the cut bound";
        return false;
    }
    detail = "K_{3,3} with three colors is infeasible (" + std::to_string(cut) + " > " +
             std::to_string(bound) + " cut edges) and fails the cross-edge bound";
    return true;
}

bool criterion5(std::string& detail)
{
    detail = std::to_string(g_invariant_violations) +
             " internal invariant violations across all corpus runs";
    return g_invariant_violations == 0;
}

bool criterion6(const CorpusResult& corpus, std::string& detail)
{
    detail = "improvement steps per insertion peaked at " + std::to_string(corpus.max_steps) +
             ", always within the n*r budget; every applied step strictly increases the "
             "potential (enforced at commit time)";
    return corpus.steps_ok && g_invariant_violations == 0;
}

bool criterion7(std::string& detail)
{
    auto [g, cert] = gen_stacked_planar(80, 4242, 0.15);
    Instance inst;
    inst.g = std::move(g);
    inst.r = std::max(9, inst.g.max_degree()) + 1;
    inst.lists = gen_lists(80, inst.r, 2 * inst.r, 4243);
    Trace t1, t2;
    Coloring c1, c2;
    try {
        c1 = se_color(inst, &t1);
        c2 = se_color(inst, &t2);
    } catch (const Error&) {
        detail = "solver failed on the determinism probe";
        return false;
    }
    if (c1.color != c2.color || trace_to_jsonl(t1) != trace_to_jsonl(t2)) {
        detail = "repeated runs differed";
        return false;
    }
    Coloring replayed = replay_trace(inst, t1);
    if (replayed.color != c1.color) {
        detail = "trace replay diverged from the reported coloring";
        return false;
    }
    detail = "repeated runs are byte-identical and the trace replays to the same coloring";
    return true;
}

bool criterion8(std::string& detail)
{
    Graph k5(5);
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = u + 1; v < 5; ++v)
            k5.add_edge(u, v);
    Graph k33(6);
    for (Vertex u = 0; u < 3; ++u)
        for (Vertex v = 3; v < 6; ++v)
            k33.add_edge(u, v);
    int done = 0;
    for (const Graph* base : {&k5, &k33}) {
        auto [g, cert] = gen_subdivision(*base);
        int n = g.n;
        Graph g2 = g;
        Instance plain = plain_instance(std::move(g), 9);
        Instance random;
        random.g = std::move(g2);
        random.r = 9;
        random.lists = gen_lists(n, 9, 18, 99);
        for (const Instance* inst : {&plain, &random}) {
            try {
                if (!check_SE(*inst, se_color(*inst)).valid) {
                    detail = "subdivision coloring failed verification";
                    return false;
                }
            } catch (const Error&) {
                detail = "solver failed on a subdivision instance";
                return false;
            }
            ++done;
        }
    }
    detail = std::to_string(done) +
             " subdivision instances (one-per-edge splits of dense graphs) solved and verified";
    return done == 4;
}

} // namespace

int main()
{
    int failures = 0;
    auto report = [&](int num, const char* title, bool ok, const std::string& detail) {
        std::printf("criterion %d (%s): %s - %s\n", num, title, ok ? "PASS" : "FAIL",
                    detail.c_str());
        if (!ok)
            ++failures;
    };

    CorpusResult corpus = run_random_corpus(500);
    std::string detail;

    bool ok = criterion1(corpus, detail);
    report(1, "random planar corpus", ok, detail);
    ok = criterion2(detail);
    report(2, "small graphs vs oracle", ok, detail);
    ok = criterion3(detail);
    report(3, "plain lists are equitable", ok, detail);
    ok = criterion4(detail);
    report(4, "infeasible instance detected", ok, detail);
    ok = criterion5(detail);
    report(5, "no internal invariant violations", ok, detail);
    ok = criterion6(corpus, detail);
    report(6, "bounded monotone improvement", ok, detail);
    ok = criterion7(detail);
    report(7, "deterministic and replayable", ok, detail);
    ok = criterion8(detail);
    report(8, "subdivision instances", ok, detail);

    return failures == 0 ? 0 : 1;
}

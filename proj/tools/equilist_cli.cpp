#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "equilist/dot_export.hpp"
#include "equilist/errors.hpp"
#include "equilist/generators.hpp"
#include "equilist/json_io.hpp"
#include "equilist/oracle.hpp"
#include "equilist/solver.hpp"

namespace {

using namespace equilist;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitNegative = 1;  // invalid coloring / NoneExists / NotInB
constexpr int kExitUsage = 2;     // input or argument errors
constexpr int kExitInternal = 3;  // internal invariant violation

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        fail(ErrKind::InvalidInstance, "cannot read " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        fail(ErrKind::InvalidInstance, "cannot write " + path);
    out << text;
}

void emit(const std::string& text, const std::string& out_path)
{
    if (out_path.empty())
        std::cout << text << "\n";
    else
        write_file(out_path, text);
}

std::uint64_t default_seed()
{
    const char* env = std::getenv("EQUILIST_SEED");
    return env ? std::strtoull(env, nullptr, 10) : 0;
}

json se_report_json(const SEReport& rep)
{
    json j;
    j["valid"] = rep.valid;
    j["proper"] = rep.proper;
    j["lists_ok"] = rep.lists_ok;
    if (rep.bad_edge)
        j["bad_edge"] = {rep.bad_edge->first, rep.bad_edge->second};
    if (rep.bad_vertex)
        j["bad_vertex"] = *rep.bad_vertex;
    j["overfull"] = rep.overfull;
    j["full_count"] = rep.full_count;
    j["allowed_full"] = rep.allowed_full;
    j["cap"] = rep.cap;
    return j;
}

int cmd_solve(const std::string& in, const std::string& out, const std::string& trace_path)
{
    Instance inst = instance_from_json(read_file(in));
    Trace trace;
    try {
        Coloring col = se_color(inst, &trace);
        emit(coloring_to_json(col), out);
        if (!trace_path.empty())
            write_file(trace_path, trace_to_jsonl(trace));
        return kExitOk;
    } catch (const Error& e) {
        if (e.kind == ErrKind::InternalInvariantViolation) {
            std::string path = trace_path.empty() ? in + ".trace.jsonl" : trace_path;
            write_file(path, e.trace_jsonl.empty() ? trace_to_jsonl(trace) : e.trace_jsonl);
            std::cerr << e.what() << " (trace written to " << path << ")\n";
            return kExitInternal;
        }
        throw;
    }
}

int cmd_verify(const std::string& in, const std::string& col_path, bool strong)
{
    Instance inst = instance_from_json(read_file(in));
    Coloring col = coloring_from_json(read_file(col_path));
    if (static_cast<int>(col.color.size()) != inst.g.n)
        fail(ErrKind::InvalidInstance, "coloring length does not match the graph");
    SEReport rep = check_SE(inst, col);
    json j = se_report_json(rep);
    bool ok = rep.valid;
    if (strong && rep.valid && inst.g.n > 0) {
        bool plain = true;
        for (Vertex v = 1; v < inst.g.n && plain; ++v)
            plain = inst.lists[v] == inst.lists[0];
        if (plain) {
            int lo = inst.g.n / inst.r;
            int hi = (inst.g.n + inst.r - 1) / inst.r;
            auto part = partition_classes(inst, col);
            bool balanced = true;
            for (const auto& [c, members] : part.classes) {
                int sz = static_cast<int>(members.size());
                if (sz != lo && sz != hi)
                    balanced = false;
            }
            j["equitable_partition"] = balanced;
            ok = ok && balanced;
        }
    }
    std::cout << j.dump() << "\n";
    return ok ? kExitOk : kExitNegative;
}

int cmd_gen(const std::string& mode, int n, std::uint64_t seed, double delete_fraction,
            int max_degree, const std::string& base_in, const std::string& base_name, int r,
            int palette_size, const std::string& out)
{
    Graph g;
    Certificate cert;
    if (mode == "planar") {
        std::tie(g, cert) = gen_stacked_planar(n, seed, delete_fraction, max_degree);
    } else if (mode == "subdivide") {
        Graph h;
        if (!base_in.empty()) {
            h = graph_from_json(read_file(base_in));
        } else if (base_name == "k33") {
            h = Graph(6);
            for (Vertex u = 0; u < 3; ++u)
                for (Vertex v = 3; v < 6; ++v)
                    h.add_edge(u, v);
        } else if (base_name == "k5") {
            h = Graph(5);
            for (Vertex u = 0; u < 5; ++u)
                for (Vertex v = u + 1; v < 5; ++v)
                    h.add_edge(u, v);
        } else {
            fail(ErrKind::InvalidInstance, "subdivide needs --base-in or --base k33|k5");
        }
        std::tie(g, cert) = gen_subdivision(h);
    } else {
        fail(ErrKind::InvalidInstance, "unknown generation mode " + mode);
    }
    Instance inst;
    inst.g = std::move(g);
    inst.r = r > 0 ? r : std::max(9, inst.g.max_degree());
    int pal = palette_size > 0 ? palette_size : inst.r;
    inst.lists = gen_lists(inst.g.n, inst.r, pal, seed + 1);
    emit(instance_to_json(inst, &cert), out);
    return kExitOk;
}

int cmd_oracle(const std::string& in, long long budget)
{
    Instance inst = instance_from_json(read_file(in));
    OracleResult res = oracle_se_color(inst, budget);
    json j;
    j["nodes"] = res.nodes;
    switch (res.outcome) {
    case OracleResult::Outcome::Found:
        j["outcome"] = "found";
        j["colors"] = res.coloring.color;
        std::cout << j.dump() << "\n";
        return kExitOk;
    case OracleResult::Outcome::NoneExists:
        j["outcome"] = "none_exists";
        std::cout << j.dump() << "\n";
        return kExitNegative;
    case OracleResult::Outcome::BudgetExceeded:
        j["outcome"] = "budget_exceeded";
        std::cout << j.dump() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

int cmd_export_h(const std::string& in, const std::string& col_path, const std::string& out)
{
    Instance inst = instance_from_json(read_file(in));
    Coloring partial;
    if (col_path.empty())
        partial.color.assign(inst.g.n, -1);
    else
        partial = coloring_from_json(read_file(col_path));
    if (static_cast<int>(partial.color.size()) != inst.g.n)
        fail(ErrKind::InvalidInstance, "coloring length does not match the graph");
    emit(export_h_dot(inst, partial), out);
    return kExitOk;
}

int cmd_check_b(const std::string& in, int budget)
{
    Graph g = graph_from_json(read_file(in));
    BMembership res = verify_class_B(g, budget);
    json j;
    switch (res.verdict) {
    case BMembership::Verdict::InB:
        j["verdict"] = "in_b";
        j["certificate"] = res.certificate;
        std::cout << j.dump() << "\n";
        return kExitOk;
    case BMembership::Verdict::NotInB:
        j["verdict"] = "not_in_b";
        j["witness_x"] = res.witness_x;
        j["witness_y"] = res.witness_y;
        std::cout << j.dump() << "\n";
        return kExitNegative;
    case BMembership::Verdict::Unknown:
        j["verdict"] = "unknown";
        j["reason"] = res.reason;
        std::cout << j.dump() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"strongly equitable list colorings"};
    app.require_subcommand(1);

    std::string in, out, col_path, trace_path, mode, base_in, base_name;
    bool strong = false;
    int n = 10, r = 0, palette_size = 0, b_budget = 16, max_degree = 0;
    double delete_fraction = 0.0;
    long long budget = 20000000;
    std::uint64_t seed = default_seed();

    auto* solve = app.add_subcommand("solve", "compute a strongly equitable list coloring");
    solve->add_option("-i,--in", in)->required();
    solve->add_option("-o,--out", out);
    solve->add_option("--trace", trace_path);
    solve->add_option("--seed", seed);

    auto* verify = app.add_subcommand("verify", "check a coloring for strong equitability");
    verify->add_option("-i,--in", in)->required();
    verify->add_option("-c,--coloring", col_path)->required();
    verify->add_flag("--strong", strong, "also require the plain-list balanced partition");

    auto* gen = app.add_subcommand("gen", "generate a certified instance");
    gen->add_option("--mode", mode)->required()->check(CLI::IsMember({"planar", "subdivide"}));
    gen->add_option("--n", n);
    gen->add_option("--seed", seed);
    gen->add_option("--delete-fraction", delete_fraction);
    gen->add_option("--max-degree", max_degree);
    gen->add_option("--base-in", base_in);
    gen->add_option("--base", base_name);
    gen->add_option("--r", r);
    gen->add_option("--palette-size", palette_size);
    gen->add_option("-o,--out", out);

    auto* oracle = app.add_subcommand("oracle", "exhaustive search for small instances");
    oracle->add_option("-i,--in", in)->required();
    oracle->add_option("--budget", budget);

    auto* exporth = app.add_subcommand("export-h", "render the color digraph as DOT");
    exporth->add_option("-i,--in", in)->required();
    exporth->add_option("-c,--coloring", col_path);
    exporth->add_option("-o,--out", out);

    auto* checkb = app.add_subcommand("check-b", "exact cross-edge bound membership test");
    checkb->add_option("-i,--in", in)->required();
    checkb->add_option("--budget", b_budget);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return cmd_solve(in, out, trace_path);
        if (verify->parsed())
            return cmd_verify(in, col_path, strong);
        if (gen->parsed())
            return cmd_gen(mode, n, seed, delete_fraction, max_degree, base_in, base_name, r,
                           palette_size, out);
        if (oracle->parsed())
            return cmd_oracle(in, budget);
        if (exporth->parsed())
            return cmd_export_h(in, col_path, out);
        if (checkb->parsed())
            return cmd_check_b(in, b_budget);
    } catch (const Error& e) {
        std::cerr << e.what() << "\n";
        switch (e.kind) {
        case ErrKind::InternalInvariantViolation:
            return kExitInternal;
        default:
            return kExitUsage;
        }
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

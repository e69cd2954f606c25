// Command-line front end for the H-product algebra library.
//
// Exit codes: 0 ok, 1 verification mismatch, 2 parse error,
// 3 dimension mismatch, 4 internal assertion failure.

#include "hthresh/factorize.hpp"
#include "hthresh/obstructions.hpp"
#include "hthresh/threshold.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace hthresh;
using nlohmann::json;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw ParseError("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

Graph load_graph(const std::string& path) {
    std::string text = slurp(path);
    // trim whitespace; graph6 is a single line
    size_t a = text.find_first_not_of(" \t\r\n");
    size_t b = text.find_last_not_of(" \t\r\n");
    if (a == std::string::npos)
        throw ParseError("empty graph file: " + path);
    return parse_graph6(text.substr(a, b - a + 1));
}

std::string witness_text(const ThresholdRepresentation& rep) {
    std::ostringstream out;
    out << write_digraph(rep.h);
    out << "sequence:";
    for (int c : rep.sequence)
        out << ' ' << c;
    out << '\n';
    return out.str();
}

json witness_json(const ThresholdRepresentation& rep) {
    json arcs = json::array();
    for (int i = 0; i < rep.h.order(); ++i)
        for (int j = 0; j < rep.h.order(); ++j)
            if (rep.h.arc(i, j))
                arcs.push_back({i + 1, j + 1});
    return {{"h", {{"k", rep.h.order()}, {"arcs", arcs}}}, {"sequence", rep.sequence}};
}

std::string partitioned_dot(const PartitionedGraph& t) {
    std::ostringstream out;
    out << "graph {\n";
    for (int v = 0; v < t.order(); ++v)
        out << "  n" << v << " [label=\"" << v << ":" << t.class_of(v) << "\"];\n";
    for (int u = 0; u < t.order(); ++u)
        for (int v = u + 1; v < t.order(); ++v)
            if (t.graph().adjacent(u, v))
                out << "  n" << u << " -- n" << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string digraph_dot(const Digraph& h, const std::string& name) {
    std::ostringstream out;
    out << "digraph " << name << " {\n";
    for (int i = 0; i < h.order(); ++i)
        for (int j = 0; j < h.order(); ++j)
            if (h.arc(i, j))
                out << "  c" << i + 1 << " -> c" << j + 1 << ";\n";
    out << "}\n";
    return out.str();
}

int run_product(const std::string& a_path, const std::string& b_path,
                const std::string& h_path, const std::string& format) {
    PartitionedGraph a = parse_partitioned(slurp(a_path));
    PartitionedGraph b = parse_partitioned(slurp(b_path));
    Digraph h = parse_digraph(slurp(h_path));
    if (a.class_count() != h.order() || b.class_count() != h.order())
        throw DimensionError("operand class count does not match |V(H)|");
    PartitionedGraph p = h_product(a, b, h);
    if (format == "dot")
        std::cout << partitioned_dot(p);
    else if (format == "json")
        std::cout << json{{"graph6", write_graph6(p.graph())},
                          {"k", p.class_count()},
                          {"classes", p.classes()}}
                         .dump(2)
                  << '\n';
    else
        std::cout << write_partitioned(p);
    return 0;
}

int run_factorize(const std::string& t_path, const std::string& h_path,
                  const std::string& format) {
    PartitionedGraph t = parse_partitioned(slurp(t_path));
    Digraph h = parse_digraph(slurp(h_path));
    if (t.class_count() != h.order())
        throw DimensionError("input class count does not match |V(H)|");
    FactorSequence seq = normalize(factorize(t, h));
    size_t m = seq.factors.size();
    json commutes = json::array();
    for (size_t i = 0; i < m; ++i) {
        json row = json::array();
        for (size_t j = 0; j < m; ++j)
            row.push_back(factors_commute(seq.factors[i], seq.factors[j], h));
        commutes.push_back(std::move(row));
    }
    if (format == "json") {
        json factors = json::array();
        for (const auto& f : seq.factors)
            factors.push_back({{"graph6", write_graph6(f.graph())},
                               {"k", f.class_count()},
                               {"classes", f.classes()}});
        std::cout << json{{"factors", factors}, {"commutes", commutes}}.dump(2) << '\n';
    } else {
        for (size_t i = 0; i < m; ++i) {
            std::cout << "factor " << i + 1 << ":\n" << write_partitioned(seq.factors[i]);
        }
        std::cout << "commutes: " << commutes.dump() << '\n';
    }
    return 0;
}

int run_width(const std::string& g_path, int max_k, const std::string& format) {
    Graph g = load_graph(g_path);
    WidthResult r = threshold_width(g, max_k);
    if (format == "json") {
        json out;
        if (r.width) {
            out["width"] = *r.width;
            out["witness"] = witness_json(*r.rep);
        } else {
            out["width"] = ">" + std::to_string(max_k);
        }
        std::cout << out.dump(2) << '\n';
    } else if (r.width) {
        std::cout << *r.width << '\n' << witness_text(*r.rep);
    } else {
        std::cout << '>' << max_k << '\n';
    }
    return 0;
}

int run_represent(const std::string& g_path, int max_k, const std::string& format) {
    Graph g = load_graph(g_path);
    if (max_k <= 0)
        max_k = std::max(1, g.order());
    WidthResult r = threshold_width(g, max_k);
    if (!r.width) {
        std::cout << '>' << max_k << '\n';
        return 0;
    }
    if (format == "json")
        std::cout << witness_json(*r.rep).dump(2) << '\n';
    else if (format == "dot")
        std::cout << digraph_dot(r.rep->h, "H");
    else
        std::cout << witness_text(*r.rep);
    return 0;
}

int run_recognize2(const std::string& g_path, const std::string& format) {
    Graph g = load_graph(g_path);
    Width2Result r = recognize_width2(g);
    std::string verdict = r.width_class == 1   ? "1"
                          : r.width_class == 2 ? "2 " + r.route
                                               : ">2";
    if (format == "json") {
        json out{{"verdict", verdict}};
        if (r.rep)
            out["witness"] = witness_json(*r.rep);
        std::cout << out.dump(2) << '\n';
    } else {
        std::cout << verdict << '\n';
        if (r.rep)
            std::cout << witness_text(*r.rep);
    }
    return 0;
}

int run_mine(int max_n, int jobs, const std::string& format) {
    auto obs = mine_minimal_obstructions(max_n, jobs);
    json report = json::array();
    for (const auto& o : obs)
        report.push_back({{"graph6", write_graph6(o.graph)},
                          {"order", o.graph.order()},
                          {"complement_graph6", write_graph6(canonical_form(complement(o.graph)))},
                          {"name", o.name},
                          {"deleted_width_class", o.deleted_width_class}});
    if (format == "text") {
        for (const auto& o : obs)
            std::cout << write_graph6(o.graph) << '\t' << o.name << '\n';
    } else {
        std::cout << json{{"max_n", max_n}, {"obstructions", report}}.dump(2) << '\n';
    }
    return 0;
}

int run_verify(const std::string& g_path, const std::string& witness_path) {
    Graph g = load_graph(g_path);
    std::string text = slurp(witness_path);
    size_t pos = text.find("sequence:");
    if (pos == std::string::npos)
        throw ParseError("witness file has no sequence line");
    Digraph h = parse_digraph(text.substr(0, pos));
    std::istringstream seq_in(text.substr(pos + 9));
    std::vector<int> sequence;
    int c;
    while (seq_in >> c) {
        if (c < 1 || c > h.order())
            throw DimensionError("sequence class id out of range");
        sequence.push_back(c);
    }
    if (static_cast<int>(sequence.size()) != g.order())
        throw DimensionError("sequence length does not match graph order");
    Graph built = expand_representation(h, sequence);
    bool ok = canonical_key(built) == canonical_key(g);
    std::cout << (ok ? "ok" : "mismatch") << '\n';
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"H-product algebra on partitioned graphs"};
    app.require_subcommand(1);
    app.fallthrough(); // accept global flags after the subcommand name

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    std::string a_path, b_path, h_path, g_path, w_path;
    int max_k = 3, rep_max_k = 0, max_n = 6, jobs = 1;

    auto* product = app.add_subcommand("product", "H-product of two partitioned graphs");
    product->add_option("a", a_path, "left operand file")->required();
    product->add_option("b", b_path, "right operand file")->required();
    product->add_option("--digraph", h_path, "digraph H file")->required();

    auto* factorize_cmd = app.add_subcommand("factorize", "unique H-decomposition");
    factorize_cmd->add_option("t", a_path, "partitioned graph file")->required();
    factorize_cmd->add_option("--digraph", h_path, "digraph H file")->required();

    auto* width = app.add_subcommand("width", "exact threshold-width");
    width->add_option("g", g_path, "graph6 file")->required();
    width->add_option("--max-k", max_k, "largest width to try")->check(CLI::PositiveNumber);

    auto* represent = app.add_subcommand("represent", "threshold representation (H, sequence)");
    represent->add_option("g", g_path, "graph6 file")->required();
    represent->add_option("--max-k", rep_max_k, "largest width to try (default: the order)");

    auto* recognize2 = app.add_subcommand("recognize2", "fast width-<=2 recognition");
    recognize2->add_option("g", g_path, "graph6 file")->required();

    auto* mine = app.add_subcommand("mine", "mine minimal forbidden induced subgraphs");
    mine->add_option("--max-n", max_n, "largest order to mine")->check(CLI::Range(2, 7));
    mine->add_option("--jobs", jobs, "worker count")->check(CLI::PositiveNumber);

    auto* verify = app.add_subcommand("verify", "check a printed witness against a graph");
    verify->add_option("g", g_path, "graph6 file")->required();
    verify->add_option("witness", w_path, "witness file (digraph lines + sequence)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (product->parsed())
            return run_product(a_path, b_path, h_path, format);
        if (factorize_cmd->parsed())
            return run_factorize(a_path, h_path, format);
        if (width->parsed())
            return run_width(g_path, max_k, format);
        if (represent->parsed())
            return run_represent(g_path, rep_max_k, format);
        if (recognize2->parsed())
            return run_recognize2(g_path, format);
        if (mine->parsed())
            return run_mine(max_n, jobs, format);
        if (verify->parsed())
            return run_verify(g_path, w_path);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const DimensionError& e) {
        std::cerr << "dimension error: " << e.what() << '\n';
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "parse error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return 4;
    }
    return 2;
}

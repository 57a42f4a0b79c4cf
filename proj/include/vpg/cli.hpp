#pragma once

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "vpg/constructors.hpp"
#include "vpg/graph.hpp"
#include "vpg/lowerbound.hpp"
#include "vpg/oracle.hpp"
#include "vpg/poset.hpp"
#include "vpg/representation.hpp"
#include "vpg/svg.hpp"

namespace vpg::cli {

namespace detail {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline std::ifstream open_in(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    return in;
}

inline void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
}

inline VpgRepresentation load_rep(const std::string& path) {
    auto in = open_in(path);
    return read_representation(in);
}

inline Graph load_graph(const std::string& path) {
    auto in = open_in(path);
    return read_graph(in);
}

inline Poset load_poset(const std::string& path) {
    auto in = open_in(path);
    return read_poset(in);
}

// Clique paths are the ones whose label is not a subset "{...}".
inline std::vector<std::string> clique_labels(const VpgRepresentation& R) {
    std::vector<std::string> out;
    for (const auto& l : R.labels())
        if (!is_subset_label(l)) out.push_back(l);
    return out;
}

inline std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string tok; std::getline(ss, tok, ',');)
        if (!tok.empty()) out.push_back(tok);
    return out;
}

inline SplitPartition infer_partition(const Graph& g) {
    SplitPartition p;
    for (std::size_t v = 0; v < g.order(); ++v) (is_subset_label(g.label(v)) ? p.independent : p.clique).push_back(v);
    return p;
}

}  // namespace detail

// Exit status: 0 success / property holds, 1 property fails, 2 usage or input error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Construct, verify and analyse rectilinear-path (VPG) representations", "vpgtool"};
    app.require_subcommand(1);
    int status = 0;

    // construct
    auto* construct = app.add_subcommand("construct", "Build a representation");
    construct->require_subcommand(1);
    struct ConstructArgs {
        int n = 0, k = 0;
        std::string out_path, graph_out, svg_out, graph_in;
    };
    auto cargs = std::make_shared<ConstructArgs>();
    auto emit = [&, cargs](const VpgRepresentation& R, const Graph& g) {
        std::ostringstream rep;
        write_representation(rep, R);
        if (cargs->out_path.empty()) {
            out << rep.str();
        } else {
            detail::write_file(cargs->out_path, rep.str());
        }
        if (!cargs->graph_out.empty()) {
            std::ostringstream gs;
            write_graph(gs, g);
            detail::write_file(cargs->graph_out, gs.str());
        }
        if (!cargs->svg_out.empty()) detail::write_file(cargs->svg_out, render_svg(R));
        err << "paths: " << R.size() << ", max bends: " << max_bends(R) << '\n';
    };
    auto add_common = [cargs](CLI::App* sc) {
        sc->add_option("-o,--output", cargs->out_path, "Representation file (default stdout)");
        sc->add_option("--graph-out", cargs->graph_out, "Also write the target graph");
        sc->add_option("--svg", cargs->svg_out, "Also write an SVG drawing");
    };
    auto* c_split = construct->add_subcommand("split-upper", "Split-graph construction (bends <= 2*Delta_c - 1)");
    c_split->add_option("--n", cargs->n, "Clique size of K^k_n");
    c_split->add_option("--k", cargs->k, "Neighbourhood size of K^k_n");
    c_split->add_option("--graph", cargs->graph_in, "Split graph file; '{..}' labels form the independent side");
    add_common(c_split);
    c_split->callback([&, cargs] {
        if (!cargs->graph_in.empty()) {
            Graph g = detail::load_graph(cargs->graph_in);
            emit(construct_split_upper(g, detail::infer_partition(g)), g);
        } else {
            auto sg = build_split_knk(cargs->n, cargs->k);
            emit(construct_split_upper(sg.graph, sg.partition), sg.graph);
        }
    });
    auto* c_k3n = construct->add_subcommand("k3n", "Proper representation of K^3_n");
    c_k3n->add_option("--n", cargs->n)->required();
    add_common(c_k3n);
    c_k3n->callback([&, cargs] { emit(construct_k3n_proper(cargs->n), k3n_target(cargs->n)); });
    auto* c_k2n = construct->add_subcommand("k2n", "Proper 1-bend representation of K^2_n");
    c_k2n->add_option("--n", cargs->n)->required();
    add_common(c_k2n);
    c_k2n->callback([&, cargs] { emit(construct_k2n_proper(cargs->n), vpg::detail::split_knk(cargs->n, 2).graph); });
    auto* c_gtm = construct->add_subcommand("gtm", "Staircase representation of H_{n,k} with all Q-pairs");
    c_gtm->add_option("--n", cargs->n)->required();
    c_gtm->add_option("--k", cargs->k)->required();
    add_common(c_gtm);
    c_gtm->callback([&, cargs] {
        emit(construct_gtm_stairs(cargs->n, cargs->k),
             build_hnk_member(cargs->n, cargs->k, all_subset_pairs(cargs->n, cargs->k)));
    });

    // verify
    std::string v_graph, v_rep;
    bool v_proper = false;
    auto* verify = app.add_subcommand("verify", "Check that a representation realizes a graph");
    verify->add_option("graph", v_graph)->required();
    verify->add_option("rep", v_rep)->required();
    verify->add_flag("--proper", v_proper, "Also require a proper representation");
    verify->callback([&] {
        Graph g = detail::load_graph(v_graph);
        auto R = detail::load_rep(v_rep);
        auto rep = verify_realizes(R, g);
        out << "realizes: " << (rep.ok ? "yes" : "no") << '\n';
        for (const auto& [a, b] : rep.missing) out << "missing: " << a << ' ' << b << '\n';
        for (const auto& [a, b] : rep.spurious) out << "spurious: " << a << ' ' << b << '\n';
        out << "max bends: " << max_bends(R) << '\n';
        bool ok = rep.ok;
        if (v_proper) {
            auto pr = is_proper(R);
            out << "proper: " << (pr.ok ? "yes" : "no") << '\n';
            for (const auto& v : pr.violations) out << "violation: " << describe(v) << '\n';
            ok = ok && pr.ok;
        }
        status = ok ? 0 : 1;
    });

    // goodsets
    std::string g_rep;
    int g_k = 0;
    long g_t = -1;
    auto* goodsets = app.add_subcommand("goodsets", "List good k-sets of the clique paths");
    goodsets->add_option("rep", g_rep)->required();
    goodsets->add_option("--k", g_k)->required();
    goodsets->add_option("--t", g_t, "Bend bound for the count check (default: max clique bends)");
    goodsets->callback([&] {
        auto R = detail::load_rep(g_rep);
        auto RA = R.restricted(detail::clique_labels(R));
        if (RA.empty()) throw detail::UsageError("representation has no clique paths");
        const auto sets = enumerate_good_sets(RA, g_k);
        for (const auto& s : sets) {
            out << '{';
            const auto ls = member_labels(RA, s.members);
            for (std::size_t i = 0; i < ls.size(); ++i) out << (i ? "," : "") << ls[i];
            out << "} " << (s.orientation == Orientation::Vertical ? "vertical" : "horizontal") << ' '
                << to_string(s.witness) << '\n';
        }
        const unsigned long t = g_t >= 0 ? static_cast<unsigned long>(g_t) : max_bends(RA);
        const BigInt n(static_cast<unsigned long>(RA.size()));
        const BigInt bound = 8 * n * n * (BigInt(t) + 1) * (BigInt(t) + 1);
        const bool holds = BigInt(static_cast<unsigned long>(sets.size())) <= bound;
        out << "count: " << sets.size() << '\n' << "bound 8n^2(t+1)^2: " << bound.get_str() << " (t = " << t << ")\n";
        out << "within bound: " << (holds ? "yes" : "no") << '\n';
        status = holds ? 0 : 1;
    });

    // certificate
    std::string cert_rep, cert_target;
    auto* certificate = app.add_subcommand("certificate", "Bend lower bound for a path meeting exactly a target set");
    certificate->add_option("rep", cert_rep)->required();
    certificate->add_option("--target", cert_target, "Comma-separated clique labels")->required();
    certificate->callback([&] {
        auto R = detail::load_rep(cert_rep);
        auto RA = R.restricted(detail::clique_labels(R));
        Subset T;
        for (const auto& l : detail::split_csv(cert_target)) {
            std::size_t pos = 0;
            while (pos < RA.size() && RA.label(pos) != l) ++pos;
            if (pos == RA.size()) throw detail::UsageError("unknown clique label " + l);
            T.push_back(static_cast<int>(pos) + 1);
        }
        std::sort(T.begin(), T.end());
        if (std::adjacent_find(T.begin(), T.end()) != T.end()) throw detail::UsageError("repeated target label");
        auto cert = bend_lb_certificate(RA, T);
        out << "k: " << T.size() << '\n' << "c: " << cert.c << '\n';
        if (cert.min_bends) {
            out << "bend lower bound: " << *cert.min_bends << '\n';
        } else {
            out << "bend lower bound: unrealizable (no probe meets the target)\n";
            status = 1;
        }
    });

    // posets
    auto* posets = app.add_subcommand("posets", "Containment posets P(r,s;n) and dimension");
    posets->require_subcommand(1);
    int pr = 0, ps = 0, pn = 0, pmax = 4;
    std::string p_out, p_file, p_realizer;
    auto* p_build = posets->add_subcommand("build", "Write P(r,s;n)");
    p_build->add_option("--r", pr)->required();
    p_build->add_option("--s", ps)->required();
    p_build->add_option("--n", pn)->required();
    p_build->add_option("-o,--output", p_out);
    p_build->callback([&] {
        std::ostringstream os;
        write_poset(os, build_p_rsn(pr, ps, pn));
        if (p_out.empty()) {
            out << os.str();
        } else {
            detail::write_file(p_out, os.str());
        }
    });
    auto* p_dim = posets->add_subcommand("dim", "Exact dimension by exhaustive search");
    p_dim->add_option("poset", p_file)->required();
    p_dim->add_option("--max", pmax, "Largest dimension to try");
    p_dim->callback([&] {
        auto p = detail::load_poset(p_file);
        auto res = brute_force_dimension(p, pmax);
        if (!res.dimension) {
            out << "dimension: > " << pmax << '\n';
            status = 1;
            return;
        }
        out << "dimension: " << *res.dimension << '\n';
        for (const auto& o : res.witness) {
            out << "order:";
            for (auto x : o) out << ' ' << p.element(x);
            out << '\n';
        }
    });
    auto* p_check = posets->add_subcommand("realizer-check", "Check a realizer (one order per line, least first)");
    p_check->add_option("poset", p_file)->required();
    p_check->add_option("realizer", p_realizer)->required();
    p_check->callback([&] {
        auto p = detail::load_poset(p_file);
        auto in = detail::open_in(p_realizer);
        Realizer R;
        std::string line;
        while (std::getline(in, line)) {
            std::istringstream ls(line);
            LinearOrder o;
            for (std::string tok; ls >> tok;) {
                auto i = p.index_of(tok);
                if (!i) throw detail::UsageError("unknown element " + tok);
                o.push_back(*i);
            }
            if (!o.empty()) R.push_back(std::move(o));
        }
        bool ok = false;
        try {
            ok = is_realizer(p, R);
        } catch (const DomainError& e) {
            throw detail::UsageError(e.what());
        }
        out << "realizer: " << (ok ? "yes" : "no") << '\n';
        status = ok ? 0 : 1;
    });

    // counting
    std::string cn = "auto";
    unsigned long ck = 0, ct = 0;
    auto* counting = app.add_subcommand("counting", "Big-integer checks of the counting inequalities");
    counting->add_option("--n", cn, "Integer, or 'auto' for 2k^2k!+3");
    counting->add_option("--k", ck)->required();
    counting->add_option("--t", ct)->required();
    counting->callback([&] {
        BigInt n;
        if (cn == "auto") {
            n = paper_n(ck);
        } else if (n.set_str(cn, 10) != 0) {
            throw detail::UsageError("bad --n " + cn);
        }
        auto r = validate_counting(n, ck, ct);
        auto yn = [](bool b) { return b ? "true" : "false"; };
        out << "n: " << n.get_str() << '\n';
        out << "(a) 8n^2(t+1)^2 <= 2n^2k^2: " << yn(r.a) << '\n';
        out << "(b) k! < ceil(k/2)! floor(k/2)! (k-5)!: " << yn(r.b) << '\n';
        out << "(c) 2n^2k^2k! < n(n-1)(n-2): " << yn(r.c) << '\n';
        out << "(d) 2n^2k^2(k-3)C(k,ceil(k/2))C(n-k,k-3) < C(n,k): " << yn(r.d) << '\n';
        status = r.a && r.b && r.c && r.d ? 0 : 1;
    });

    // oracle
    std::string o_graph, o_grid = "8x8";
    int o_bends = 0;
    std::uint64_t o_nodes = 1'000'000;
    bool o_proper = false;
    auto* oracle = app.add_subcommand("oracle", "Search a bounded grid for a representation");
    oracle->add_option("graph", o_graph)->required();
    oracle->add_option("--grid", o_grid, "WxH");
    oracle->add_option("--bends", o_bends)->required();
    oracle->add_option("--nodes", o_nodes, "Node budget");
    oracle->add_flag("--proper", o_proper);
    oracle->callback([&] {
        Graph g = detail::load_graph(o_graph);
        GridSearchBudget b;
        const auto x = o_grid.find('x');
        try {
            if (x == std::string::npos) throw std::invalid_argument("grid");
            b.width = std::stoi(o_grid.substr(0, x));
            b.height = std::stoi(o_grid.substr(x + 1));
        } catch (const std::exception&) {
            throw detail::UsageError("bad --grid " + o_grid);
        }
        b.max_bends = o_bends;
        b.node_limit = o_nodes;
        auto res = search_representation(g, b, o_proper);
        if (res.witness) {
            write_representation(out, *res.witness);
            err << "found after " << res.nodes << " nodes\n";
        } else {
            out << (res.budget_exhausted ? "not found within budget" : "no representation on this grid") << '\n';
            status = 1;
        }
    });

    // render
    std::string r_rep, r_out;
    int r_probes = 0;
    auto* render = app.add_subcommand("render", "Draw a representation as SVG");
    render->add_option("rep", r_rep)->required();
    render->add_option("-o,--output", r_out)->required();
    render->add_option("--probes", r_probes, "Overlay witnesses of the good k-sets for this k");
    render->callback([&] {
        auto R = detail::load_rep(r_rep);
        std::vector<Segment> probes;
        if (r_probes > 0) {
            auto RA = R.restricted(detail::clique_labels(R));
            if (!RA.empty())
                for (const auto& s : enumerate_good_sets(RA, r_probes)) probes.push_back(s.witness);
        }
        detail::write_file(r_out, render_svg(R, {}, probes));
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const detail::UsageError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return status;
}

}  // namespace vpg::cli

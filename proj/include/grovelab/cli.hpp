#pragma once

#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "network_json.hpp"
#include "verify.hpp"

namespace grovelab::cli {

enum class Status { ok = 0, counterexample = 1, input_error = 2 };

struct CommandResult {
    Status status = Status::ok;
    std::vector<std::string> lines; ///< text payload
    nlohmann::json data;            ///< structured payload for --json
};

struct Options {
    int n = 0, d = 2, trials = 0;
    std::uint64_t seed = 1;
    bool all = false, json = false;
    std::string network, builtin, partition, xi, kind, from, to = "ncp", target, arg, rule = "single";
};

namespace detail {

inline CommandResult single(std::string line) {
    CommandResult r;
    r.data = line;
    r.lines.push_back(std::move(line));
    return r;
}

inline CactusNetwork network_of(const Options& o) {
    if (!o.network.empty() && !o.builtin.empty()) throw InputError("give either --network or --builtin");
    if (!o.network.empty()) return load_network(o.network);
    if (!o.builtin.empty()) return builtin_network(o.builtin);
    throw InputError("a network is required (--network FILE or --builtin NAME)");
}

inline int require_n(const Options& o) {
    if (o.n < 1) throw InputError("--n must be a positive integer");
    return o.n;
}

inline BetaRule rule_of(const Options& o) {
    if (o.rule == "single") return BetaRule::single_root;
    if (o.rule == "split") return BetaRule::split_roots;
    throw InputError("--rule must be single or split");
}

inline std::string render(const DyckPath& p, const std::string& kind) {
    if (kind == "dyck") return p.to_string();
    if (kind == "ncm") return matching_of_path(p).to_string();
    if (kind == "ncp") return partition_of_path(p).to_string();
    throw InputError("unknown target '" + kind + "'");
}

} // namespace detail

inline CommandResult cmd_enum(const Options& o) {
    const int n = detail::require_n(o);
    std::vector<std::string> items;
    if (o.kind == "dyck")
        for (auto& p : enumerate_dyck(n)) items.push_back(p.to_string());
    else if (o.kind == "ncm")
        for (auto& m : enumerate_ncm(n)) items.push_back(m.to_string());
    else if (o.kind == "ncp")
        for (auto& p : enumerate_ncp(n)) items.push_back(p.to_string());
    else if (o.kind == "matchings")
        for (auto& m : enumerate_matchings(n)) items.push_back(m.to_string());
    else if (o.kind == "tc")
        for (auto& m : enumerate_tc(n)) items.push_back(m.to_string());
    else if (o.kind == "chains")
        for (auto& c : enumerate_chains(n, o.d)) items.push_back(to_string(c));
    else
        throw InputError("unknown kind '" + o.kind + "' (dyck, ncm, ncp, matchings, tc, chains)");
    CommandResult r;
    r.lines = items;
    r.data = items;
    return r;
}

inline CommandResult cmd_convert(const Options& o) {
    DyckPath p;
    std::string from = o.from;
    if (from.empty()) from = o.arg.find('|') == std::string::npos ? "dyck" : "";
    if (from == "dyck") p = DyckPath::parse(o.arg);
    else if (from == "ncm") {
        auto m = Matching::parse(o.arg);
        if (!crossings(m).empty()) throw InputError("matching " + m.to_string() + " is crossing");
        p = path_of_matching(m);
    } else if (from == "ncp")
        p = path_of_partition(NoncrossingPartition::parse(o.arg));
    else
        throw InputError("--from must be dyck, ncm or ncp");
    return detail::single(detail::render(p, o.to));
}

inline CommandResult cmd_medial(const Options& o) { return detail::single(detail::network_of(o).medial_pairing().to_string()); }

inline CommandResult cmd_dual(const Options& o) {
    auto d = dual_network(detail::network_of(o));
    CommandResult r;
    r.lines.push_back(network_to_json(d));
    r.data = spec_to_json(network_spec(d));
    return r;
}

inline CommandResult cmd_groves(const Options& o) {
    auto g = detail::network_of(o);
    CommandResult r;
    r.data = nlohmann::json::array();
    for (auto& gr : enumerate_groves(g)) {
        std::string ids;
        for (int e : gr.edges) ids += (ids.empty() ? "" : ",") + g.E[e].id;
        r.lines.push_back("{" + ids + "} " + gr.sigma.to_string());
        r.data.push_back({{"edges", ids}, {"partition", gr.sigma.to_string()}});
    }
    return r;
}

inline CommandResult cmd_measure(const Options& o) {
    auto g = detail::network_of(o);
    if (!o.partition.empty()) return detail::single(grove_measurement(g, NoncrossingPartition::parse(o.partition, g.n)).to_string());
    CommandResult r;
    r.data = nlohmann::json::object();
    for (auto& [s, p] : all_measurements(g)) {
        r.lines.push_back(s.to_string() + ": " + p.to_string());
        r.data[s.to_string()] = p.to_string();
    }
    return r;
}

inline CommandResult cmd_alpha(const Options& o) { return detail::single(alpha(detail::network_of(o)).to_string()); }

inline CommandResult cmd_bush(const Options& o) {
    auto g = detail::network_of(o);
    if (!o.xi.empty()) return detail::single(bush_value(g, Matching::parse(o.xi)).to_string());
    CommandResult r;
    r.data = nlohmann::json::object();
    for (auto& [xi, p] : bush_values(g)) {
        if (p.is_zero()) continue;
        r.lines.push_back(xi.to_string() + ": " + p.to_string());
        r.data[xi.to_string()] = p.to_string();
    }
    return r;
}

inline CommandResult cmd_acoeff(const Options& o) {
    if (o.xi.empty()) throw InputError("--xi is required");
    auto xi = Matching::parse(o.xi);
    if (!is_three_noncrossing(xi)) throw InputError("matching " + xi.to_string() + " is not 3-noncrossing");
    if (!o.partition.empty()) {
        auto halves = grovelab::detail::split(o.partition, ';');
        if (halves.size() != 2) throw InputError("--partition must be 'sigma;sigma2' for acoeff");
        auto s1 = NoncrossingPartition::parse(halves[0], xi.n()), s2 = NoncrossingPartition::parse(halves[1], xi.n());
        return detail::single(a_coeff(xi, s1, s2).get_str());
    }
    CommandResult r;
    r.data = nlohmann::json::object();
    for (auto& [p, c] : a_table(xi)) {
        auto key = grovelab::detail::pair_string(p);
        r.lines.push_back(key + ": " + c.get_str());
        r.data[key] = c.get_str();
    }
    return r;
}

inline CommandResult cmd_beta(const Options& o) {
    if (o.xi.empty()) throw InputError("--xi is required");
    return detail::single(beta(Matching::parse(o.xi), detail::rule_of(o)).to_string());
}

inline CommandResult cmd_immanant(const Options& o) {
    const int n = detail::require_n(o);
    ImmanantContext ctx(n, detail::rule_of(o));
    return detail::single(ctx.f_immanant(PartialNCMatching::parse(o.arg, n)).to_string());
}

inline CommandResult cmd_delta(const Options& o) {
    const int n = detail::require_n(o);
    auto I = parse_index_set(o.arg);
    if (static_cast<int>(I.size()) != n - 1) throw InputError("index set must have n-1 elements");
    for (int x : I)
        if (x > 2 * n) throw InputError("index out of range");
    return detail::single(delta(I, n).to_string());
}

inline CommandResult cmd_straighten(const Options& o) {
    const int n = detail::require_n(o);
    auto res = straighten_monomial(LMonomial::parse(o.arg, n));
    return detail::single(res.standard.to_string());
}

inline CommandResult cmd_dims(const Options& o) {
    const int n = detail::require_n(o);
    if (o.d < 0) throw InputError("--d must be nonnegative");
    auto f = dim_formula(n, o.d);
    CommandResult r = detail::single(f.get_str());
    if (n <= 6 && o.d <= 3 && count_standard(n, o.d) != f) {
        r = detail::single("counterexample: chain count " + count_standard(n, o.d).get_str() + " != " + f.get_str());
        r.status = Status::counterexample;
    }
    return r;
}

inline CommandResult cmd_verify(const Options& o) {
    const int trials = o.trials;
    auto n_or = [&](int dflt) { return o.n > 0 ? o.n : dflt; };
    VerifyResult v;
    const std::string& t = o.target;
    if (t == "rsk") v = verify_rsk(n_or(5));
    else if (t == "maxres") v = verify_maxres(n_or(4));
    else if (t == "confluence") v = verify_confluence(n_or(3), trials > 0 ? trials : 100, 200, o.seed);
    else if (t == "product") {
        if (!o.network.empty() || !o.builtin.empty()) {
            auto g = detail::network_of(o);
            v = verify_product_on(g, o.builtin.empty() ? o.network : o.builtin);
        } else {
            v = verify_product(n_or(3), o.all, trials > 0 ? trials : 20, 5, o.seed);
        }
    } else if (t == "lemma46") v = verify_a_coefficients(n_or(4));
    else if (t == "lift") v = verify_lift(n_or(3), 5, o.seed);
    else if (t == "delta-product") v = verify_delta_products(n_or(3), o.all, trials > 0 ? trials : 200, o.seed);
    else if (t == "plucker") v = verify_plucker(n_or(3), trials > 0 ? trials : 20, o.seed);
    else if (t == "grobner") v = verify_grobner(n_or(4), 20, o.seed);
    else if (t == "dims") v = verify_dims(n_or(5));
    else
        throw InputError("unknown verify target '" + t +
                         "' (rsk, maxres, confluence, product, lemma46, lift, delta-product, plucker, grobner, dims)");
    CommandResult r = detail::single(v.message);
    r.status = v.ok ? Status::ok : Status::counterexample;
    return r;
}

/// Parses argv, runs one subcommand and returns the exit code.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    CLI::App app{"grovelab: grove algebra toolkit for planar cactus networks"};
    app.require_subcommand(1);
    Options o;

    auto net_flags = [&](CLI::App* c) {
        c->add_option("--network", o.network, "network JSON file");
        c->add_option("--builtin", o.builtin, "built-in network (y3, fig3)");
    };
    auto common = [&](CLI::App* c) { c->add_flag("--json", o.json, "JSON output"); };

    std::vector<std::pair<CLI::App*, CommandResult (*)(const Options&)>> subs;
    auto sub = [&](const char* name, const char* help, CommandResult (*fn)(const Options&)) {
        auto* c = app.add_subcommand(name, help);
        common(c);
        subs.emplace_back(c, fn);
        return c;
    };

    auto* c_enum = sub("enum", "enumerate Catalan objects or matchings", cmd_enum);
    c_enum->add_option("kind", o.kind, "dyck, ncm, ncp, matchings, tc, chains")->required();
    c_enum->add_option("--n", o.n, "size")->required();
    c_enum->add_option("--d", o.d, "chain length");

    auto* c_conv = sub("convert", "convert between Dyck paths, noncrossing matchings and partitions", cmd_convert);
    c_conv->add_option("object", o.arg, "object to convert")->required();
    c_conv->add_option("--from", o.from, "dyck, ncm, ncp (paths are detected)");
    c_conv->add_option("--to", o.to, "dyck, ncm, ncp");

    net_flags(sub("medial", "medial pairing of a network", cmd_medial));
    net_flags(sub("dual", "dual network as JSON", cmd_dual));
    net_flags(sub("groves", "list all groves", cmd_groves));
    auto* c_measure = sub("measure", "grove measurements L_sigma", cmd_measure);
    net_flags(c_measure);
    c_measure->add_option("--partition", o.partition, "boundary partition");
    net_flags(sub("alpha", "alpha of the network as a multigraph", cmd_alpha));
    auto* c_bush = sub("bush", "Bush basis values B_xi", cmd_bush);
    net_flags(c_bush);
    c_bush->add_option("--xi", o.xi, "3-noncrossing matching");
    auto* c_acoeff = sub("acoeff", "coefficients a_{xi,(sigma,sigma')}", cmd_acoeff);
    c_acoeff->add_option("--xi", o.xi, "3-noncrossing matching");
    c_acoeff->add_option("--partition", o.partition, "pair 'sigma;sigma2'");
    auto* c_beta = sub("beta", "beta(xi) over partial noncrossing matchings", cmd_beta);
    c_beta->add_option("--xi", o.xi, "3-noncrossing matching");
    c_beta->add_option("--rule", o.rule, "single or split");
    auto* c_imm = sub("immanant", "F_{tau,T} in Bush coordinates", cmd_immanant);
    c_imm->add_option("partial", o.arg, "partial matching 'tau=..;T=..'")->required();
    c_imm->add_option("--n", o.n, "size")->required();
    c_imm->add_option("--rule", o.rule, "single or split");
    auto* c_delta = sub("delta", "Delta_I as a sum of L_sigma", cmd_delta);
    c_delta->add_option("subset", o.arg, "index set, e.g. 1,2")->required();
    c_delta->add_option("--n", o.n, "size")->required();
    auto* c_str = sub("straighten", "straighten an L-monomial", cmd_straighten);
    c_str->add_option("monomial", o.arg, "factors joined by ';'")->required();
    c_str->add_option("--n", o.n, "size")->required();
    auto* c_dims = sub("dims", "dimension of G_{n,d}", cmd_dims);
    c_dims->add_option("--n", o.n, "size")->required();
    c_dims->add_option("--d", o.d, "degree");
    auto* c_verify = sub("verify", "run a verification target", cmd_verify);
    c_verify->add_option("target", o.target, "rsk, maxres, confluence, product, lemma46, lift, delta-product, plucker, grobner, dims")
        ->required();
    c_verify->add_option("--n", o.n, "size");
    c_verify->add_option("--seed", o.seed, "random seed");
    c_verify->add_option("--trials", o.trials, "random trials");
    c_verify->add_flag("--all", o.all, "exhaustive run");
    net_flags(c_verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "input error: " << e.what() << "\n";
        return static_cast<int>(Status::input_error);
    }

    for (auto& [c, fn] : subs) {
        if (!c->parsed()) continue;
        CommandResult r;
        try {
            r = fn(o);
        } catch (const InputError& e) {
            err << "input error: " << e.what() << "\n";
            return static_cast<int>(Status::input_error);
        } catch (const std::exception& e) {
            err << "internal error: " << e.what() << "\n";
            return static_cast<int>(Status::counterexample);
        }
        if (o.json) {
            nlohmann::json j;
            j["command"] = c->get_name();
            j["status"] = r.status == Status::ok ? "ok" : "counterexample";
            j["result"] = r.data;
            out << j.dump(2) << "\n";
        } else {
            for (auto& line : r.lines) out << line << "\n";
        }
        return static_cast<int>(r.status);
    }
    return static_cast<int>(Status::input_error);
}

} // namespace grovelab::cli

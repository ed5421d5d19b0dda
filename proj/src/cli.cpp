#include "designiso/cli.hpp"

#include "designiso/canonical.hpp"
#include "designiso/constructions.hpp"
#include "designiso/io.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <iostream>

namespace designiso {

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;

void emit_payload(const std::string& payload, const std::string& output_path,
                  const std::string& result_line, std::ostream& out) {
    if (output_path.empty()) {
        out << payload;  // payload is the result; keep stdout parseable
    } else {
        write_file(output_path, payload);
        out << result_line << "\n";
    }
}

Design load_design(const std::string& path) { return parse_design(read_file(path)); }

Graph load_graph(const std::string& path, std::ostream& err) {
    std::vector<std::string> warnings;
    Graph g = parse_graph(read_file(path), &warnings);
    for (const auto& w : warnings) err << "warning: " << path << ": " << w << "\n";
    return g;
}

std::string describe(const Params& p) {
    std::ostringstream os;
    os << p.t << "-(" << p.v << "," << p.k << "," << p.lambda << ")";
    return os.str();
}

}  // namespace

int cli_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"t-design validation, construction, line graphs, reconstruction and "
                 "canonical isomorphism testing"};
    app.require_subcommand(1);
    int threads = 1;
    app.add_option("--threads", threads, "worker threads for the canonical search")
        ->check(CLI::Range(1, 256));

    std::string out_path;

    // gen
    auto* gen = app.add_subcommand("gen", "generate a design");
    gen->require_subcommand(1);
    gen->add_option("-o,--output", out_path, "write the design file here (default: stdout)");
    auto* gen_fano = gen->add_subcommand("fano", "the 2-(7,3,1) Fano plane");
    int sqs_d = 3;
    auto* gen_sqs = gen->add_subcommand("sqs", "boolean SQS(2^d), a 3-(2^d,4,1) design");
    gen_sqs->add_option("d", sqs_d, "dimension, d >= 3")->required();
    int sts_v = 7;
    auto* gen_sts = gen->add_subcommand("sts", "Steiner triple system 2-(v,3,1)");
    gen_sts->add_option("v", sts_v, "order, v = 1 or 3 (mod 6), v >= 7")->required();
    int cx_v = 0, cx_k = 0, cx_t = 0;
    auto* gen_complete = gen->add_subcommand("complete", "all k-subsets of v points");
    gen_complete->add_option("v", cx_v)->required();
    gen_complete->add_option("k", cx_k)->required();
    gen_complete->add_option("t", cx_t)->required();
    std::string scramble_file;
    std::uint64_t scramble_seed = 0;
    auto* gen_scramble = gen->add_subcommand("scramble", "apply a seeded point permutation");
    gen_scramble->add_option("file", scramble_file)->required();
    gen_scramble->add_option("seed", scramble_seed)->required();
    std::string pasch_file;
    auto* gen_pasch = gen->add_subcommand("pasch", "switch the first Pasch configuration");
    gen_pasch->add_option("file", pasch_file)->required();

    // validate
    std::string validate_file;
    auto* cmd_validate = app.add_subcommand("validate", "validate a design file");
    cmd_validate->add_option("file", validate_file)->required();

    // params
    Params params_args{};
    auto* cmd_params = app.add_subcommand("params", "derived counts and admissibility");
    cmd_params->add_option("t", params_args.t)->required();
    cmd_params->add_option("v", params_args.v)->required();
    cmd_params->add_option("k", params_args.k)->required();
    cmd_params->add_option("lambda", params_args.lambda)->required();

    // linegraph
    std::string lg_file;
    auto* cmd_lg = app.add_subcommand("linegraph", "emit the block intersection graph (DIMACS)");
    cmd_lg->add_option("file", lg_file)->required();
    cmd_lg->add_option("-o,--output", out_path, "write the DIMACS file here (default: stdout)");

    // reconstruct
    std::string rec_file;
    Params rec_params{};
    bool rec_force = false;
    auto* cmd_rec = app.add_subcommand("reconstruct", "recover a design from its line graph");
    cmd_rec->add_option("file", rec_file)->required();
    cmd_rec->add_option("--t", rec_params.t)->required();
    cmd_rec->add_option("--k", rec_params.k)->required();
    cmd_rec->add_option("--lambda", rec_params.lambda)->required();
    cmd_rec->add_flag("--force", rec_force, "diagnostic: skip the b > k^2(k-1) gate");
    cmd_rec->add_option("-o,--output", out_path, "write the design file here (default: stdout)");

    // canon
    std::string canon_file;
    auto* cmd_canon = app.add_subcommand("canon", "canonical form and digest of a design");
    cmd_canon->add_option("file", canon_file)->required();

    // iso
    std::string iso_file1, iso_file2;
    auto* cmd_iso = app.add_subcommand("iso", "decide isomorphism of two designs");
    cmd_iso->add_option("file1", iso_file1)->required();
    cmd_iso->add_option("file2", iso_file2)->required();

    // graph-iso
    std::string gi_file1, gi_file2, gi_cert_prefix;
    Params gi_params{};
    auto* cmd_gi =
        app.add_subcommand("graph-iso", "decide isomorphism of two design line graphs");
    cmd_gi->add_option("file1", gi_file1)->required();
    cmd_gi->add_option("file2", gi_file2)->required();
    cmd_gi->add_option("--t", gi_params.t)->required();
    cmd_gi->add_option("--k", gi_params.k)->required();
    cmd_gi->add_option("--lambda", gi_params.lambda)->required();
    cmd_gi->add_option("--cert-prefix", gi_cert_prefix,
                       "write <prefix>.1.design, <prefix>.2.design and <prefix>.map.json");

    for (auto* sub : {gen_fano, gen_sqs, gen_sts, gen_complete, gen_scramble, gen_pasch})
        sub->fallthrough();  // lets gen's -o appear after the nested subcommand

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return kOk;
        }
        err << e.what() << "\n" << app.help();
        return kUsage;
    }

    try {
        if (gen->parsed()) {
            Design d;
            if (gen_fano->parsed())
                d = fano();
            else if (gen_sqs->parsed())
                d = boolean_sqs(sqs_d);
            else if (gen_sts->parsed())
                d = sts(sts_v);
            else if (gen_complete->parsed())
                d = complete_design(cx_v, cx_k, cx_t);
            else if (gen_scramble->parsed())
                d = scramble(load_design(scramble_file), scramble_seed);
            else if (gen_pasch->parsed()) {
                auto switched = pasch_switch(load_design(pasch_file));
                if (!switched) {
                    out << "RESULT: no Pasch configuration\n";
                    return kNegative;
                }
                d = *switched;
            }
            emit_payload(emit_design(d), out_path,
                         "RESULT: generated " + describe(d.params) + " design, b=" +
                             std::to_string(d.blocks.size()),
                         out);
            return kOk;
        }

        if (cmd_validate->parsed()) {
            ValidationReport report = validate(load_design(validate_file));
            for (const auto& viol : report.violations)
                out << viol.rule << ": " << viol.detail
                    << (viol.witness.empty() ? "" : " at " + viol.witness) << "\n";
            if (report.ok()) {
                out << "RESULT: valid\n";
                return kOk;
            }
            out << "RESULT: invalid (" << report.violations.size() << " violations)\n";
            return kNegative;
        }

        if (cmd_params->parsed()) {
            check_params(params_args);  // malformed quadruples are usage errors, not "inadmissible"
            ValidationReport report = check_admissibility(params_args);
            for (const auto& viol : report.violations)
                out << viol.rule << ": " << viol.detail << "\n";
            if (!report.ok()) {
                out << "RESULT: inadmissible\n";
                return kNegative;
            }
            DerivedCounts counts = derived_counts(params_args);
            out << "b = " << counts.b << "\nr = " << counts.r << "\n";
            for (int s = 0; s <= params_args.t; ++s)
                out << "lambda_" << s << " = " << counts.lambda_s[s] << "\n";
            if (auto bound = fisher_lower_bound(params_args))
                out << "fisher_lower_bound = " << *bound << "\n";
            else
                out << "fisher_lower_bound = not applicable\n";
            out << "RESULT: admissible b=" << counts.b << " r=" << counts.r << "\n";
            return kOk;
        }

        if (cmd_lg->parsed()) {
            Graph g = line_graph(load_design(lg_file));
            emit_payload(emit_graph(g), out_path,
                         "RESULT: line graph n=" + std::to_string(g.n) + " m=" +
                             std::to_string(g.edge_count()),
                         out);
            return kOk;
        }

        if (cmd_rec->parsed()) {
            Graph g = load_graph(rec_file, err);
            ReconstructionResult result =
                reconstruct(g, rec_params.t, rec_params.k, rec_params.lambda, rec_force);
            for (const auto& w : result.warnings) err << "warning: " << w << "\n";
            if (!result.certified()) {
                err << "reconstruction certificate failed\n";
                return kUsage;
            }
            emit_payload(emit_design(result.design), out_path,
                         "RESULT: reconstructed " + describe(result.design.params) +
                             " design, b=" + std::to_string(result.design.blocks.size()) +
                             ", certificate ok",
                         out);
            return kOk;
        }

        if (cmd_canon->parsed()) {
            CanonicalStats stats;
            CanonicalForm form = canonical_form(load_design(canon_file), threads, &stats);
            err << "sequences_explored=" << stats.sequences_explored
                << " branch_nodes=" << stats.branch_nodes << " leaves=" << stats.leaves << "\n";
            out << "RESULT: digest " << form.digest << "\n";
            return kOk;
        }

        if (cmd_iso->parsed()) {
            Design d1 = load_design(iso_file1);
            Design d2 = load_design(iso_file2);
            auto witness = are_isomorphic(d1, d2, threads);
            if (!witness) {
                out << "RESULT: non-isomorphic\n";
                return kNegative;
            }
            out << "map:";
            for (int p = 0; p < d1.params.v; ++p) out << " " << p << "->" << (*witness)[p];
            out << "\nRESULT: isomorphic\n";
            return kOk;
        }

        if (cmd_gi->parsed()) {
            Graph g1 = load_graph(gi_file1, err);
            Graph g2 = load_graph(gi_file2, err);
            LineGraphIsoCertificate cert =
                line_graph_isomorphic(g1, g2, gi_params.t, gi_params.k, gi_params.lambda, threads);
            for (const auto& w : cert.reconstruction1.warnings) err << "warning: " << w << "\n";
            if (!gi_cert_prefix.empty()) {
                write_file(gi_cert_prefix + ".1.design", emit_design(cert.reconstruction1.design));
                write_file(gi_cert_prefix + ".2.design", emit_design(cert.reconstruction2.design));
                nlohmann::json j;
                j["isomorphic"] = cert.isomorphic;
                if (cert.point_map) j["point_map"] = *cert.point_map;
                if (cert.vertex_map) j["vertex_map"] = *cert.vertex_map;
                write_file(gi_cert_prefix + ".map.json", j.dump(2) + "\n");
            }
            if (!cert.isomorphic) {
                out << "RESULT: non-isomorphic\n";
                return kNegative;
            }
            out << "vertex map:";
            for (int i = 0; i < g1.n; ++i) out << " " << i << "->" << (*cert.vertex_map)[i];
            out << "\nRESULT: isomorphic\n";
            return kOk;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    err << "unknown subcommand\n" << app.help();
    return kUsage;
}

}  // namespace designiso

// Command-line front end: classification, assembly construction and
// verification, signature queries, the census table, locus reports and
// limit-set rendering.
//
// Exit codes: 0 success, 1 domain error (error name on stderr), 2 I/O or
// parse error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "schottky/examples.hpp"
#include "schottky/schottky.hpp"
#include "schottky/serial.hpp"

namespace {

using namespace schottky;

void write_file(const std::string& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << data;
    if (!out) throw IoError("write to " + path + " failed");
}

void emit(const std::string& path, const std::string& data) {
    if (path.empty() || path == "-")
        std::cout << data;
    else
        write_file(path, data);
}

std::string describe(const TransformClass& c) {
    std::string out = to_string(c.tag);
    char buf[64];
    switch (c.tag) {
        case TransformClass::Tag::Elliptic:
            std::snprintf(buf, sizeof buf, " angle %.12g", c.rotation_angle);
            out += buf;
            if (c.order) out += " order " + std::to_string(*c.order);
            break;
        case TransformClass::Tag::PseudoElliptic:
            if (c.order) out += " order " + std::to_string(*c.order);
            break;
        case TransformClass::Tag::Loxodromic:
            std::snprintf(buf, sizeof buf, " multiplier modulus %.12g", c.multiplier_modulus);
            out += buf;
            break;
        default: break;
    }
    return out;
}

int run_classify(const std::string& input) {
    ExtendedMoebius t = parse_transform(input);
    std::cout << describe(classify(t)) << "\n";
    return 0;
}

int run_build(const std::string& path, const std::string& out_path) {
    GroupAssembly a = assembly_from_json(load_json_file(path));
    std::string text = assembly_to_json(a).dump(2) + "\n";
    if (!out_path.empty()) {
        write_file(out_path, text);
        std::cout << "assembly with " << a.factors.size() << " factors and " << a.hnn.size()
                  << " pairings written to " << out_path << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

int run_verify(const std::string& path, int depth) {
    GroupAssembly a = assembly_from_json(load_json_file(path));
    VerificationReport rep = verify_ping_pong(a, depth);
    if (rep.passed()) {
        std::cout << "ping-pong verification passed at depth " << depth << "\n";
        return 0;
    }
    for (const Finding& f : rep.findings) std::cout << f.code << ": " << f.detail << "\n";
    std::cerr << rep.findings.front().code << std::endl;
    return 1;
}

int run_admit(const std::string& path) {
    Signature s = signature_from_json(load_json_file(path));
    Admissibility a = is_admissible(s);
    if (a.admissible)
        std::cout << "admissible\n";
    else
        std::cout << "inadmissible: " << a.reason << "\n";
    return 0;
}

int run_rank(const std::string& path) {
    Signature s = signature_from_json(load_json_file(path));
    std::cout << rank(s) << "\n";
    return 0;
}

int run_epi(const std::string& path) {
    Signature s = signature_from_json(load_json_file(path));
    auto epi = find_epimorphism(s);
    if (!epi) {
        std::cout << "none\n";
        return 0;
    }
    for (size_t i = 0; i < epi->slots.size(); ++i) {
        const GeneratorSlot& slot = epi->slots[i];
        std::cout << "factor " << slot.factor_index << " (" << to_string(slot.factor_kind)
                  << ") " << slot.name << " -> " << epi->residues[i] << "\n";
    }
    return 0;
}

int run_realize(const std::string& path, const std::string& out_path, int depth) {
    Signature s = signature_from_json(load_json_file(path));
    GroupAssembly a = realize(s);
    VerificationReport rep = verify_ping_pong(a, depth);
    if (!rep.passed()) {
        for (const Finding& f : rep.findings) std::cout << f.code << ": " << f.detail << "\n";
        std::cerr << rep.findings.front().code << std::endl;
        return 1;
    }
    std::string text = assembly_to_json(a).dump(2) + "\n";
    if (!out_path.empty()) {
        write_file(out_path, text);
        std::cout << "assembly of rank " << rank(s) << " written to " << out_path << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

int run_census(int gmax, int genus, bool list, const std::string& out_path) {
    if (genus > 0 && list) {
        std::string text;
        for (const SixTuple& t : enumerate_Xg(genus)) {
            char buf[96];
            std::snprintf(buf, sizeof buf, "(%d, %d, %d, %d, %d, %d)\n", t[0], t[1], t[2], t[3],
                          t[4], t[5]);
            text += buf;
        }
        emit(out_path, text);
        return 0;
    }
    std::string text = "g\tcount_closedform\tcount_bruteforce\tmatch\n";
    for (int g = 1; g <= gmax; ++g) {
        CensusRow row = census_row(g);
        char buf[96];
        std::snprintf(buf, sizeof buf, "%d\t%ld\t%ld\t%s\n", g, row.count_closedform,
                      row.count_bruteforce, row.match() ? "yes" : "no");
        text += buf;
    }
    emit(out_path, text);
    return 0;
}

int run_locus(const std::string& path, const std::string& json_path) {
    Signature s = signature_from_json(load_json_file(path));
    std::vector<LocusComponent> rep = locus_report(s);
    std::string text = "shape\tcount\tfixed_by\tlocation\tsource\tnote\n";
    Json j = Json::array();
    for (const LocusComponent& c : rep) {
        char buf[256];
        std::snprintf(buf, sizeof buf, "%s\t%d\ttau^%d\t%s\t%s\t%s\n", to_string(c.shape),
                      c.count, c.fixed_by, to_string(c.location), c.source.c_str(),
                      c.note.c_str());
        text += buf;
        j.push_back({{"shape", to_string(c.shape)},
                     {"count", c.count},
                     {"fixed_by", c.fixed_by},
                     {"location", to_string(c.location)},
                     {"source", c.source},
                     {"note", c.note}});
    }
    if (rep.empty()) text += "(free action: empty locus)\n";
    std::cout << text;
    if (!json_path.empty()) write_file(json_path, j.dump(2) + "\n");
    return 0;
}

int run_limitset(const std::string& path, int depth, const std::string& out_path) {
    GroupAssembly a = assembly_from_json(load_json_file(path));
    VerificationReport rep = verify_ping_pong(a, std::min(depth, 4));
    if (!rep.passed()) {
        for (const Finding& f : rep.findings) std::cout << f.code << ": " << f.detail << "\n";
        std::cerr << rep.findings.front().code << std::endl;
        return 1;
    }
    std::vector<LimitPoint> pts = sample_limit_set(a, depth);
    emit(out_path, render_svg(a, pts));
    if (!out_path.empty() && out_path != "-")
        std::cout << pts.size() << " limit points written to " << out_path << "\n";
    return 0;
}

int run_examples(std::uint64_t seed) {
    bool all = true;
    for (const ExampleRow& r : reproduce_examples(seed)) {
        std::cout << (r.pass ? "pass" : "FAIL") << "  [" << r.fixture << "] " << r.claim;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << "\n";
        all = all && r.pass;
    }
    if (!all) {
        std::cerr << "ExampleFailure" << std::endl;
        return 1;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construction, classification and verification of extended Kleinian "
                 "groups assembled from basic factors"};
    app.require_subcommand(1);
    std::uint64_t seed = 0;
    app.add_option("--seed", seed, "seed for randomized sweeps (default 0)");

    std::string input, out_path, json_path;
    int depth = 8, gmax = 10, genus = 0;
    bool list = false;

    CLI::App* classify_cmd =
        app.add_subcommand("classify", "classify a transformation '[a, b; c, d] +|-'");
    classify_cmd->add_option("transform", input)->required();

    CLI::App* build_cmd = app.add_subcommand("build", "build an assembly from JSON");
    build_cmd->add_option("input", input)->required();
    build_cmd->add_option("--out", out_path, "write the normalized assembly JSON here");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run ping-pong verification");
    verify_cmd->add_option("input", input)->required();
    verify_cmd->add_option("--depth", depth, "word depth for the freeness check");

    CLI::App* admit_cmd = app.add_subcommand("admit", "test a signature for admissibility");
    admit_cmd->add_option("input", input)->required();

    CLI::App* rank_cmd = app.add_subcommand("rank", "rank of the normal Schottky subgroup");
    rank_cmd->add_option("input", input)->required();

    CLI::App* epi_cmd = app.add_subcommand("epi", "find a quotient epimorphism");
    epi_cmd->add_option("input", input)->required();

    CLI::App* realize_cmd = app.add_subcommand("realize", "realize a signature geometrically");
    realize_cmd->add_option("input", input)->required();
    realize_cmd->add_option("--out", out_path, "write the assembly JSON here");
    realize_cmd->add_option("--depth", depth, "verification depth");

    CLI::App* census_cmd = app.add_subcommand("census", "count signatures per rank (n = 2)");
    census_cmd->add_option("--gmax", gmax, "largest rank for the table");
    census_cmd->add_option("--genus", genus, "single rank to enumerate");
    census_cmd->add_flag("--list", list, "list the tuples for --genus");
    census_cmd->add_option("--out", out_path, "write TSV/list here instead of stdout");

    CLI::App* locus_cmd = app.add_subcommand("locus", "fixed-locus report for a signature");
    locus_cmd->add_option("input", input)->required();
    locus_cmd->add_option("--json", json_path, "also write a JSON report here");

    CLI::App* limit_cmd = app.add_subcommand("limitset", "render pairing circles + limit points");
    limit_cmd->add_option("input", input)->required();
    limit_cmd->add_option("--depth", depth, "word depth for limit sampling");
    limit_cmd->add_option("--out", out_path, "SVG output path")->required();

    app.add_subcommand("examples", "rebuild the reference fixtures and re-check their claims");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (classify_cmd->parsed()) return run_classify(input);
        if (build_cmd->parsed()) return run_build(input, out_path);
        if (verify_cmd->parsed()) return run_verify(input, depth);
        if (admit_cmd->parsed()) return run_admit(input);
        if (rank_cmd->parsed()) return run_rank(input);
        if (epi_cmd->parsed()) return run_epi(input);
        if (realize_cmd->parsed()) return run_realize(input, out_path, depth);
        if (census_cmd->parsed()) return run_census(gmax, genus, list, out_path);
        if (locus_cmd->parsed()) return run_locus(input, json_path);
        if (limit_cmd->parsed()) return run_limitset(input, depth, out_path);
        return run_examples(seed);
    } catch (const Error& e) {
        std::cerr << e.code() << ": " << e.what() << std::endl;
        return 1;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << std::endl;
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "io error: " << e.what() << std::endl;
        return 2;
    }
}

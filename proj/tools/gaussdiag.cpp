#include "gaussdiag/codec.hpp"
#include "gaussdiag/contours.hpp"
#include "gaussdiag/enumeration.hpp"
#include "gaussdiag/oracle.hpp"
#include "gaussdiag/realizability.hpp"
#include "gaussdiag/smoothing.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace gaussdiag;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_non_realizable = 1;
constexpr int exit_input_error = 2;

struct Options {
    std::string format = "text";
    std::string word;
    std::string batch;
    std::string chord;
    std::string flip_rule = "outside";
    std::string output;
    std::size_t max_chords = 7;
    unsigned workers = 1;
    bool require_non_isolated = false;
    bool cross_check = false;
    bool list = false;
};

codec::Format format_of(const Options& o) {
    return o.format == "structured" ? codec::Format::Structured : codec::Format::Text;
}

void add_format(CLI::App* cmd, Options& o) {
    cmd->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));
}

void add_input(CLI::App* cmd, Options& o) {
    auto* word = cmd->add_option("word", o.word, "Gauss code, e.g. \"1 2 1 2\"");
    auto* batch = cmd->add_option("--batch", o.batch, "File with one Gauss code per line");
    word->excludes(batch);
    batch->excludes(word);
}

std::vector<ChordDiagram> read_inputs(const Options& o) {
    std::vector<ChordDiagram> out;
    if (!o.batch.empty()) {
        std::ifstream in(o.batch);
        if (!in) throw Error("cannot open " + o.batch);
        for (const auto& e : codec::read_batch(in)) out.push_back(ChordDiagram::from_word(e.word));
        return out;
    }
    out.push_back(ChordDiagram::from_word(codec::parse_gauss_code(o.word)));
    return out;
}

int run_check(const Options& o) {
    const auto fmt = format_of(o);
    const auto diagrams = read_inputs(o);
    const bool batch = !o.batch.empty();
    bool all_realizable = true;
    nlohmann::json docs = nlohmann::json::array();
    for (const auto& d : diagrams) {
        auto r = is_realizable(d);
        if (o.cross_check) attach_cross_check(r, d, o.workers);
        all_realizable = all_realizable && r.verdict == Verdict::Realizable;
        if (fmt == codec::Format::Structured && batch) {
            docs.push_back(codec::report_to_json(d, r));
        } else if (batch) {
            std::cout << codec::format_gauss_code(d) << '\t' << codec::emit_report(d, r, fmt);
        } else {
            std::cout << codec::emit_report(d, r, fmt);
        }
    }
    if (fmt == codec::Format::Structured && batch) std::cout << docs.dump(2) << '\n';
    return all_realizable ? exit_ok : exit_non_realizable;
}

int run_smooth(const Options& o) {
    const auto d = ChordDiagram::from_word(codec::parse_gauss_code(o.word));
    std::cout << codec::emit_smoothing(smooth_by_word(d, d.index_of(o.chord)), format_of(o));
    return exit_ok;
}

int run_oracle(const Options& o) {
    const auto fmt = format_of(o);
    for (const auto& d : read_inputs(o)) {
        if (d.empty()) {
            std::cout << codec::emit_oracle(d, oracle::EmbeddingWitness{{}, {}, 2}, fmt);
            continue;
        }
        std::cout << codec::emit_oracle(d, oracle::oracle_realizable(d, o.workers), fmt);
    }
    return exit_ok;
}

int run_witness(const Options& o) {
    const auto rule =
        o.flip_rule == "all" ? DoorFlipRule::AllEndpoints : DoorFlipRule::OutsideEndpoints;
    for (const auto& d : read_inputs(o)) {
        std::cout << codec::emit_colorful_witness(d, exists_colorful_witness(d, rule), format_of(o));
    }
    return exit_ok;
}

enumeration::SweepConfig sweep_config(const Options& o) {
    enumeration::SweepConfig c;
    c.max_chords = o.max_chords;
    c.workers = o.workers;
    c.require_non_isolated = o.require_non_isolated;
    if (!o.output.empty()) c.output_path = o.output;
    return c;
}

int run_enumerate(const Options& o) {
    const auto config = sweep_config(o);
    if (o.list) {
        for (const auto& d : enumeration::enumerate_canonical(o.max_chords, o.workers)) {
            if (config.require_non_isolated && !enumeration::has_no_isolated_chord(d)) continue;
            codec::write_batch_line(std::cout, d.to_word());
        }
        return exit_ok;
    }
    const auto report = enumeration::enumerate_levels(config);
    if (format_of(o) == codec::Format::Structured) {
        std::cout << enumeration::sweep_to_json(report).dump(2) << '\n';
        return exit_ok;
    }
    for (const auto& l : report.levels) std::cout << "n=" << l.chords << " total=" << l.total << '\n';
    return exit_ok;
}

int run_cross_validate(const Options& o) {
    const auto report = enumeration::cross_validate(sweep_config(o));
    if (format_of(o) == codec::Format::Structured) {
        std::cout << enumeration::sweep_to_json(report).dump(2) << '\n';
        return exit_ok;
    }
    for (const auto& l : report.levels) {
        std::cout << "n=" << l.chords << " total=" << l.total << " realizable=" << l.realizable
                  << " non-realizable=" << l.non_realizable
                  << " disagreements=" << l.disagreements.size() << '\n';
    }
    return exit_ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Plane-curve realizability of Gauss diagrams"};
    app.require_subcommand(1);
    Options o;

    auto* check = app.add_subcommand("check", "Decide realizability");
    add_input(check, o);
    add_format(check, o);
    check->add_flag("--cross-check", o.cross_check, "Also run the rotation-system oracle");
    check->add_option("--workers", o.workers, "Oracle threads");

    auto* smooth = app.add_subcommand("smooth", "Conway-smooth one chord");
    smooth->add_option("word", o.word, "Gauss code")->required();
    smooth->add_option("chord", o.chord, "Chord label")->required();
    add_format(smooth, o);

    auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force planar embedding search");
    add_input(oracle_cmd, o);
    add_format(oracle_cmd, o);
    oracle_cmd->add_option("--workers", o.workers, "Search threads");

    auto* witness = app.add_subcommand("witness", "Least colorful chord of an X-contour");
    add_input(witness, o);
    add_format(witness, o);
    witness->add_option("--flip-rule", o.flip_rule, "Door endpoints that flip the color")
        ->check(CLI::IsMember({"outside", "all"}));

    auto* enumerate = app.add_subcommand("enumerate", "Count canonical diagrams");
    auto* cross = app.add_subcommand("cross-validate", "Compare criterion and oracle exhaustively");
    for (auto* cmd : {enumerate, cross}) {
        add_format(cmd, o);
        cmd->add_option("--max-chords", o.max_chords, "Largest chord count")
            ->check(CLI::Range(std::size_t{1}, std::size_t{10}));
        cmd->add_option("--workers", o.workers, "Threads");
        cmd->add_flag("--require-non-isolated", o.require_non_isolated,
                      "Skip diagrams with a chord crossing nothing");
    }
    enumerate->add_flag("--list", o.list, "Print the diagrams with exactly --max-chords chords");
    cross->add_option("--output", o.output, "Directory for the report and disagreement files");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_input_error;
    }

    for (auto* cmd : {check, oracle_cmd, witness}) {
        if (cmd->parsed() && o.word.empty() && o.batch.empty() && cmd->count("word") == 0) {
            std::cerr << "error: give a word or --batch\n";
            return exit_input_error;
        }
    }

    try {
        if (check->parsed()) return run_check(o);
        if (smooth->parsed()) return run_smooth(o);
        if (oracle_cmd->parsed()) return run_oracle(o);
        if (witness->parsed()) return run_witness(o);
        if (enumerate->parsed()) return run_enumerate(o);
        if (cross->parsed()) return run_cross_validate(o);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input_error;
    }
    return exit_input_error;
}

#include "gaussdiag/codec.hpp"

#include <cctype>
#include <istream>
#include <ostream>

namespace gaussdiag::codec {

using nlohmann::json;

namespace {

bool token_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_';
}

bool space_char(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

}  // namespace

GaussWord parse_gauss_code(std::string_view text) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        if (space_char(text[i])) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j < text.size() && !space_char(text[j])) {
            if (!token_char(text[j])) {
                throw ParseError("unexpected character '" + std::string(1, text[j]) +
                                 "' at offset " + std::to_string(j));
            }
            ++j;
        }
        tokens.emplace_back(text.substr(i, j - i));
        i = j;
    }
    if (tokens.size() == 1 && tokens.front().size() > 1) {
        std::vector<std::string> compact;
        for (char c : tokens.front()) compact.emplace_back(1, c);
        tokens = std::move(compact);
    }
    return GaussWord(std::move(tokens));
}

std::string format_gauss_code(const GaussWord& word) {
    std::string out;
    for (const auto& s : word.symbols()) {
        if (!out.empty()) out += ' ';
        out += s;
    }
    return out;
}

std::string format_gauss_code(const ChordDiagram& d) { return format_gauss_code(d.to_word()); }

std::vector<BatchEntry> read_batch(std::istream& in) {
    std::vector<BatchEntry> out;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        try {
            out.push_back({number, parse_gauss_code(line)});
        } catch (const Error& e) {
            throw ParseError("line " + std::to_string(number) + ": " + e.what());
        }
    }
    return out;
}

void write_batch_line(std::ostream& out, const GaussWord& word) {
    out << format_gauss_code(word) << '\n';
}

std::string label_list(const ChordDiagram& d, const std::vector<ChordIndex>& chords) {
    std::string out = "(";
    for (std::size_t i = 0; i < chords.size(); ++i) {
        if (i) out += ' ';
        out += d.label(chords[i]);
    }
    return out + ")";
}

namespace {

json labels_of(const ChordDiagram& d, const std::vector<ChordIndex>& chords) {
    json a = json::array();
    for (auto c : chords) a.push_back(d.label(c));
    return a;
}

json violation_json(const ChordDiagram& d, const EvenViolation& v) {
    if (v.kind == EvenViolation::Kind::OddChord) {
        return {{"type", "odd_chord"}, {"chord", d.label(v.first)},
                {"crossing", labels_of(d, v.odd_set)}};
    }
    return {{"type", "odd_pair"},
            {"pair", json::array({d.label(v.first), d.label(v.second)})},
            {"common", labels_of(d, v.odd_set)}};
}

json violations_json(const ChordDiagram& d, const EvenConditionReport& r) {
    json a = json::array();
    for (const auto& v : r.violations) a.push_back(violation_json(d, v));
    return a;
}

json faces_json(const std::vector<std::vector<oracle::Dart>>& faces) {
    json a = json::array();
    for (const auto& f : faces) a.push_back(f);
    return a;
}

json embedding_json(const ChordDiagram& d, const oracle::EmbeddingWitness& w) {
    json rotation = json::array();
    for (ChordIndex c = 0; c < w.rotation.handedness.size(); ++c) {
        rotation.push_back({{"chord", d.label(c)}, {"handedness", w.rotation.handedness[c] ? 1 : 0}});
    }
    return {{"rotation", rotation},
            {"faces", faces_json(w.faces)},
            {"euler_characteristic", w.euler_characteristic}};
}

std::vector<ChordIndex> indices_of(const ChordDiagram& d, const json& labels) {
    std::vector<ChordIndex> out;
    for (const auto& l : labels) out.push_back(d.index_of(l.get<std::string>()));
    return out;
}

EvenConditionReport violations_from(const ChordDiagram& d, const json& a) {
    EvenConditionReport r;
    for (const auto& v : a) {
        EvenViolation e;
        const auto type = v.at("type").get<std::string>();
        if (type == "odd_chord") {
            e.kind = EvenViolation::Kind::OddChord;
            e.first = e.second = d.index_of(v.at("chord").get<std::string>());
            e.odd_set = indices_of(d, v.at("crossing"));
        } else if (type == "odd_pair") {
            e.kind = EvenViolation::Kind::OddPair;
            const auto& pair = v.at("pair");
            if (pair.size() != 2) throw ParseError("pair violation needs two chords");
            e.first = d.index_of(pair[0].get<std::string>());
            e.second = d.index_of(pair[1].get<std::string>());
            e.odd_set = indices_of(d, v.at("common"));
        } else {
            throw ParseError("unknown violation type '" + type + "'");
        }
        r.violations.push_back(std::move(e));
    }
    return r;
}

std::string describe(const ChordDiagram& d, const EvenViolation& v) {
    if (v.kind == EvenViolation::Kind::OddChord) {
        return "chord " + d.label(v.first) + ", which crosses " + std::to_string(v.odd_set.size()) +
               (v.odd_set.size() == 1 ? " chord " : " chords ") + label_list(d, v.odd_set);
    }
    return "pair (" + d.label(v.first) + "," + d.label(v.second) + ")";
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

const char* color_name(Color c) { return c == Color::A ? "A" : "B"; }

const char* rule_name(DoorFlipRule r) {
    return r == DoorFlipRule::OutsideEndpoints ? "outside_endpoints" : "all_endpoints";
}

}  // namespace

json report_to_json(const ChordDiagram& d, const RealizabilityReport& r) {
    json doc;
    doc["schema_version"] = schema_version;
    doc["word"] = format_gauss_code(d);
    doc["verdict"] = r.verdict == Verdict::Realizable ? "realizable" : "non-realizable";
    doc["removed_kinks"] = labels_of(d, r.removed_kinks);
    if (const auto* w = std::get_if<EvenConditionViolation>(&r.witness)) {
        doc["witness"] = {{"kind", "even_condition"}, {"violations", violations_json(d, w->report)}};
    } else if (const auto* w = std::get_if<SmoothingViolation>(&r.witness)) {
        doc["witness"] = {{"kind", "smoothing"},
                          {"smoothed_chord", d.label(w->chord)},
                          {"smoothed_word", format_gauss_code(smooth_by_word(d, w->chord).result)},
                          {"violations", violations_json(d, w->report)}};
    } else {
        doc["witness"] = {{"kind", "none"}};
    }
    if (r.cross_check) {
        json check = {{"oracle_realizable", r.cross_check->oracle_realizable}};
        if (r.cross_check->embedding) check["embedding"] = embedding_json(d, *r.cross_check->embedding);
        doc["cross_check"] = check;
    }
    return doc;
}

RealizabilityReport report_from_json(const json& doc, const ChordDiagram& d) {
    try {
        if (doc.at("schema_version").get<int>() != schema_version) {
            throw ParseError("unsupported schema_version");
        }
        RealizabilityReport r;
        const auto verdict = doc.at("verdict").get<std::string>();
        if (verdict == "realizable") r.verdict = Verdict::Realizable;
        else if (verdict == "non-realizable") r.verdict = Verdict::NonRealizable;
        else throw ParseError("unknown verdict '" + verdict + "'");
        r.removed_kinks = indices_of(d, doc.at("removed_kinks"));

        const auto& w = doc.at("witness");
        const auto kind = w.at("kind").get<std::string>();
        if (kind == "even_condition") {
            r.witness = EvenConditionViolation{violations_from(d, w.at("violations"))};
        } else if (kind == "smoothing") {
            r.witness = SmoothingViolation{d.index_of(w.at("smoothed_chord").get<std::string>()),
                                           violations_from(d, w.at("violations"))};
        } else if (kind != "none") {
            throw ParseError("unknown witness kind '" + kind + "'");
        }

        if (doc.contains("cross_check")) {
            const auto& c = doc.at("cross_check");
            CrossCheck check;
            check.oracle_realizable = c.at("oracle_realizable").get<bool>();
            if (c.contains("embedding")) {
                const auto& e = c.at("embedding");
                oracle::EmbeddingWitness w2;
                w2.rotation.handedness.assign(d.chord_count(), false);
                for (const auto& entry : e.at("rotation")) {
                    auto idx = d.index_of(entry.at("chord").get<std::string>());
                    w2.rotation.handedness[idx] = entry.at("handedness").get<int>() != 0;
                }
                w2.faces = e.at("faces").get<std::vector<std::vector<oracle::Dart>>>();
                w2.euler_characteristic = e.at("euler_characteristic").get<long>();
                check.embedding = std::move(w2);
            }
            r.cross_check = std::move(check);
        }
        return r;
    } catch (const json::exception& e) {
        throw ParseError(std::string("report document: ") + e.what());
    }
}

std::string emit_report(const ChordDiagram& d, const RealizabilityReport& r, Format format) {
    if (format == Format::Structured) return dump(report_to_json(d, r));

    std::string line;
    if (r.verdict == Verdict::Realizable) {
        line = "realizable";
    } else if (const auto* w = std::get_if<EvenConditionViolation>(&r.witness)) {
        line = "non-realizable: even condition fails on " + describe(d, w->report.violations.front());
    } else if (const auto* w = std::get_if<SmoothingViolation>(&r.witness)) {
        line = "non-realizable: smoothing chord " + d.label(w->chord) + " breaks even condition on " +
               describe(d, w->report.violations.front());
    } else {
        line = "non-realizable";
    }
    if (r.cross_check) {
        line += r.cross_check->oracle_realizable ? "; oracle: realizable" : "; oracle: non-realizable";
    }
    return line + "\n";
}

std::string emit_smoothing(const SmoothingResult& s, Format format) {
    if (format == Format::Text) return format_gauss_code(s.result) + "\n";
    json doc;
    doc["schema_version"] = schema_version;
    doc["smoothed_word"] = format_gauss_code(s.result);
    doc["chords"] = s.result.labels();
    return dump(doc);
}

std::string emit_oracle(const ChordDiagram& d, const std::optional<oracle::EmbeddingWitness>& w,
                        Format format) {
    if (format == Format::Text) {
        if (!w) return "non-realizable\n";
        std::string flags;
        for (bool h : w->rotation.handedness) flags += h ? '1' : '0';
        return "realizable: handedness " + (flags.empty() ? std::string("-") : flags) + ", " +
               std::to_string(w->faces.size()) + " faces\n";
    }
    json doc;
    doc["schema_version"] = schema_version;
    doc["word"] = format_gauss_code(d);
    doc["verdict"] = w ? "realizable" : "non-realizable";
    if (w) doc["embedding"] = embedding_json(d, *w);
    return dump(doc);
}

std::string emit_colorful_witness(const ChordDiagram& d, const std::optional<ColorfulWitness>& w,
                                  Format format) {
    if (format == Format::Text) {
        if (!w) return "no colorful chord\n";
        return "colorful chord " + d.label(w->chord) + " for X(" + d.label(w->contour.first) + "," +
               d.label(w->contour.second) + ") arc " + std::to_string(w->contour.arc) + ", doors " +
               label_list(d, w->contour.doors) + "\n";
    }
    json doc;
    doc["schema_version"] = schema_version;
    doc["word"] = format_gauss_code(d);
    if (!w) {
        doc["witness"] = nullptr;
        return dump(doc);
    }
    json colors = json::array();
    for (const auto& c : w->coloring.segment) {
        if (c) colors.push_back(color_name(*c));
        else colors.push_back(nullptr);
    }
    doc["witness"] = {
        {"contour",
         {{"type", "X"},
          {"chords", json::array({d.label(w->contour.first), d.label(w->contour.second)})},
          {"arc", w->contour.arc},
          {"boundary", w->contour.region.boundary},
          {"members", labels_of(d, w->contour.members)},
          {"doors", labels_of(d, w->contour.doors)}}},
        {"coloring",
         {{"rule", rule_name(w->coloring.rule)},
          {"walk_start", w->coloring.walk_start},
          {"segments", colors}}},
        {"colorful_chord", d.label(w->chord)},
    };
    return dump(doc);
}

}  // namespace gaussdiag::codec

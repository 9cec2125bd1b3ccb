#ifndef GAUSSDIAG_CODEC_HPP
#define GAUSSDIAG_CODEC_HPP

#include "gaussdiag/contours.hpp"
#include "gaussdiag/core.hpp"
#include "gaussdiag/oracle.hpp"
#include "gaussdiag/realizability.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace gaussdiag::codec {

class ParseError : public Error {
public:
    using Error::Error;
};

enum class Format { Text, Structured };

/// Bumped whenever a structured document changes shape.
inline constexpr int schema_version = 1;

/// Accepts whitespace-separated tokens ("1 2 1 2") or a single compact token of
/// one-character labels ("abab"). Tokens are letters, digits and '_'.
/// Throws ParseError or MalformedWord.
GaussWord parse_gauss_code(std::string_view text);

/// Tokens joined by single spaces, no trailing newline.
std::string format_gauss_code(const GaussWord& word);
std::string format_gauss_code(const ChordDiagram& d);

struct BatchEntry {
    std::size_t line = 0;
    GaussWord word;
};

/// One word per line; blank lines and lines starting with '#' are skipped.
/// Errors are rethrown as ParseError naming the line.
std::vector<BatchEntry> read_batch(std::istream& in);
void write_batch_line(std::ostream& out, const GaussWord& word);

nlohmann::json report_to_json(const ChordDiagram& d, const RealizabilityReport& r);
/// Inverse of report_to_json for the verdict and witness; labels are resolved against d.
RealizabilityReport report_from_json(const nlohmann::json& doc, const ChordDiagram& d);

/// Structured documents end with a newline; text documents are a single line plus newline.
std::string emit_report(const ChordDiagram& d, const RealizabilityReport& r, Format format);

std::string emit_smoothing(const SmoothingResult& s, Format format);
std::string emit_oracle(const ChordDiagram& d, const std::optional<oracle::EmbeddingWitness>& w,
                        Format format);
std::string emit_colorful_witness(const ChordDiagram& d,
                                  const std::optional<ColorfulWitness>& w, Format format);

/// "(1 3 4)"-style label list.
std::string label_list(const ChordDiagram& d, const std::vector<ChordIndex>& chords);

}  // namespace gaussdiag::codec

#endif

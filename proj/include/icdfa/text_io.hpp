#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "icdfa/types.hpp"

namespace icdfa {

/// Input did not match the expected text shape. `line` is 1-based, or 0 when
/// no line context applies.
class TextParseError : public std::runtime_error {
public:
    TextParseError(int line, const std::string& what);
    int line() const { return line_; }

private:
    int line_;
};

/// Canonical one-line form `<n> <k> : <cells...>`, single-space separated.
std::string format_string_line(const CanonicalString& s);

/// Same, with ` | <finals...>` appended when the final set is nonempty.
std::string format_normal_form_line(const NormalForm& nf);

struct ParsedStringLine {
    CanonicalString string;
    std::vector<int> finals;  ///< empty when no `|` section was present
};

/// Whitespace-tolerant parse of a string line, optionally with a finals
/// section. Checks well-formedness of the shape, not rules R1/R2.
ParsedStringLine parse_string_line(std::string_view line);

/// Reads the line-oriented automaton format:
///
///     states: 5
///     symbols: 2
///     initial: 0
///     finals: 1 4
///     table:
///     0 1
///     0 4
///     ...
///
/// Blank lines and lines starting with `#` are ignored. Keys must appear in
/// the order above; the table needs one row per state with one target per
/// symbol. Errors carry 1-based line numbers.
Dfa parse_dfa_document(std::istream& in);
Dfa parse_dfa_document_text(std::string_view text);

using LineSink = std::function<void(const char* data, std::size_t size)>;

struct EmitStats {
    std::uint64_t emitted = 0;
};

/// Writes string lines for (n, k) in lexicographic order to the sink:
/// everything, or the strings strictly after `from`, capped at `limit`.
/// With jobs > 1 the rank space is split into contiguous ranges rendered in
/// parallel and drained in range order, so the byte stream is identical to
/// the single-job run.
EmitStats emit_string_lines(int n, int k,
                            const std::optional<CanonicalString>& from,
                            std::optional<std::uint64_t> limit, int jobs,
                            const LineSink& sink);

}  // namespace icdfa

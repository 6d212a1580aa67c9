#pragma once

#include "formgen/errors.hpp"

#include <atomic>
#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

namespace formgen {

struct RunConfig {
    std::string schema_path;
    std::string stylesheet_path;
    std::string output_path;
    enum class Mode { once, watch } mode = Mode::once;
    std::chrono::milliseconds poll_interval{500};
};

struct Diagnostic {
    Stage stage = Stage::io;
    std::string message;
    std::string file;
    int line = 0;
    int column = 0;
};

/// "stage:file:line:column: message"
std::string format_diagnostic(const Diagnostic& diag);

/// Run the full pipeline on in-memory texts. The file labels are only used
/// to attribute diagnostics. Returns the page text on success.
std::variant<std::string, Diagnostic> compile(std::string_view schema_text,
                                              std::string_view stylesheet_text,
                                              const std::string& schema_file,
                                              const std::string& stylesheet_file);

/// Read both inputs, compile, and write the page atomically (temporary file
/// plus rename). Returns the process exit status: 0 on success, otherwise
/// the failing stage's code; exactly one diagnostic is printed to `err` on
/// failure and no partial output file is left behind.
int run_once(const RunConfig& config, std::ostream& err);

/// Generate once, then poll both input files and regenerate whenever either
/// file's content digest changes. A failed regeneration leaves the previous
/// output intact and prints its diagnostic; the loop never exits on a
/// compile error. `stop` is an optional external interrupt for embedding;
/// the CLI passes nullptr and the loop runs until the process is killed.
int run_watch(const RunConfig& config, std::ostream& err,
              const std::atomic<bool>* stop = nullptr);

/// FNV-1a 64-bit content digest used for change detection.
std::uint64_t content_digest(std::string_view bytes);

std::optional<std::string> read_file(const std::string& path);

/// Write via temporary file + rename so the destination always holds either
/// the previous or the new complete content. Throws IoError.
void atomic_write(const std::string& path, std::string_view content);

} // namespace formgen

#include "formgen/pipeline.hpp"

#include "formgen/binder.hpp"
#include "formgen/codegen.hpp"
#include "formgen/lexer.hpp"
#include "formgen/schema_parser.hpp"
#include "formgen/stylesheet.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>
#include <thread>

namespace formgen {

const char* stage_name(Stage stage) {
    switch (stage) {
    case Stage::lexical: return "lexical";
    case Stage::syntax: return "syntax";
    case Stage::binding: return "binding";
    case Stage::io: return "io";
    }
    return "?";
}

int exit_code_for(Stage stage) {
    switch (stage) {
    case Stage::lexical: return 1;
    case Stage::syntax: return 2;
    case Stage::binding: return 3;
    case Stage::io: return 4;
    }
    return 4;
}

std::string format_diagnostic(const Diagnostic& diag) {
    std::ostringstream out;
    out << stage_name(diag.stage) << ":" << diag.file << ":" << diag.line << ":"
        << diag.column << ": " << diag.message;
    return out.str();
}

namespace {

Diagnostic from_error(const CompileError& error, const std::string& file) {
    return Diagnostic{error.stage(), error.what(), file, error.line(), error.column()};
}

} // namespace

std::variant<std::string, Diagnostic> compile(std::string_view schema_text,
                                              std::string_view stylesheet_text,
                                              const std::string& schema_file,
                                              const std::string& stylesheet_file) {
    SchemaDocument doc;
    try {
        doc = parse_schema(tokenize(schema_text, schema_profile()));
    } catch (const CompileError& error) {
        return from_error(error, schema_file);
    }

    std::vector<StyleInstruction> instructions;
    try {
        instructions = parse_stylesheet(tokenize(stylesheet_text, stylesheet_profile()));
    } catch (const CompileError& error) {
        return from_error(error, stylesheet_file);
    }

    try {
        BindingPlan plan = bind(doc, instructions);
        return assemble_page(plan);
    } catch (const CompileError& error) {
        // Binding failures point into the stylesheet: the instruction is
        // what names the element and picks the tag.
        return from_error(error, stylesheet_file);
    }
}

std::uint64_t content_digest(std::string_view bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char byte : bytes) {
        hash ^= byte;
        hash *= 1099511628211ull;
    }
    return hash;
}

std::optional<std::string> read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buffer;
    buffer << in.rdbuf();
    if (in.bad())
        return std::nullopt;
    return buffer.str();
}

void atomic_write(const std::string& path, std::string_view content) {
    const std::string temp = path + ".tmp";
    {
        std::ofstream out(temp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw IoError("cannot open '" + temp + "' for writing");
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(temp, ec);
            throw IoError("failed writing '" + temp + "'");
        }
    }
    std::error_code ec;
    std::filesystem::rename(temp, path, ec);
    if (ec) {
        std::error_code ignore;
        std::filesystem::remove(temp, ignore);
        throw IoError("cannot rename '" + temp + "' to '" + path + "': " + ec.message());
    }
}

namespace {

// One full generation cycle. Prints exactly one diagnostic on failure.
int generate(const RunConfig& config, std::ostream& err) {
    auto schema_text = read_file(config.schema_path);
    if (!schema_text) {
        Diagnostic diag{Stage::io, "cannot read schema file '" + config.schema_path + "'",
                        config.schema_path, 0, 0};
        err << format_diagnostic(diag) << "\n";
        return exit_code_for(Stage::io);
    }
    auto stylesheet_text = read_file(config.stylesheet_path);
    if (!stylesheet_text) {
        Diagnostic diag{Stage::io,
                        "cannot read stylesheet file '" + config.stylesheet_path + "'",
                        config.stylesheet_path, 0, 0};
        err << format_diagnostic(diag) << "\n";
        return exit_code_for(Stage::io);
    }

    auto result = compile(*schema_text, *stylesheet_text, config.schema_path,
                          config.stylesheet_path);
    if (auto* diag = std::get_if<Diagnostic>(&result)) {
        err << format_diagnostic(*diag) << "\n";
        return exit_code_for(diag->stage);
    }

    try {
        atomic_write(config.output_path, std::get<std::string>(result) + "\n");
    } catch (const IoError& error) {
        Diagnostic diag = from_error(error, config.output_path);
        err << format_diagnostic(diag) << "\n";
        return exit_code_for(Stage::io);
    }
    return 0;
}

std::optional<std::uint64_t> digest_of(const std::string& path) {
    auto content = read_file(path);
    if (!content)
        return std::nullopt;
    return content_digest(*content);
}

} // namespace

int run_once(const RunConfig& config, std::ostream& err) {
    return generate(config, err);
}

int run_watch(const RunConfig& config, std::ostream& err, const std::atomic<bool>* stop) {
    generate(config, err);
    auto last_schema = digest_of(config.schema_path);
    auto last_stylesheet = digest_of(config.stylesheet_path);

    const auto slice = std::chrono::milliseconds(5);
    for (;;) {
        auto waited = std::chrono::milliseconds(0);
        while (waited < config.poll_interval) {
            if (stop && stop->load())
                return 0;
            auto step = std::min(slice, config.poll_interval - waited);
            std::this_thread::sleep_for(step);
            waited += step;
        }
        if (stop && stop->load())
            return 0;

        auto schema = digest_of(config.schema_path);
        auto stylesheet = digest_of(config.stylesheet_path);
        if (schema != last_schema || stylesheet != last_stylesheet) {
            generate(config, err);
            last_schema = schema;
            last_stylesheet = stylesheet;
        }
    }
}

} // namespace formgen

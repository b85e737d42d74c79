#include "maxplus/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <vector>

#include "maxplus/errors.hpp"

namespace maxplus {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;  // 1-based
    std::vector<Token> tokens;
};

std::vector<Token> tokenize(std::string_view line, char separator = '\0') {
    std::vector<Token> out;
    std::size_t i = 0;
    auto is_sep = [&](char c) {
        return std::isspace(static_cast<unsigned char>(c)) || (separator != '\0' && c == separator);
    };
    while (i < line.size()) {
        while (i < line.size() && is_sep(line[i])) ++i;
        std::size_t start = i;
        while (i < line.size() && !is_sep(line[i])) ++i;
        if (i > start) out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

// Non-blank, non-comment lines.
std::vector<Line> data_lines(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    while (!text.empty()) {
        ++number;
        auto eol = text.find('\n');
        auto line = text.substr(0, eol);
        text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        auto tokens = tokenize(line);
        if (tokens.empty() || tokens.front().text.front() == '#') continue;
        out.push_back({number, std::move(tokens)});
    }
    return out;
}

std::string slurp(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

unsigned long parse_positive(const Token& tok, const std::string& source, std::size_t line, const char* what) {
    const auto& s = tok.text;
    bool ok = !s.empty() && s.size() < 19;
    for (char c : s) ok = ok && std::isdigit(static_cast<unsigned char>(c));
    unsigned long value = ok ? std::stoul(std::string(s)) : 0;
    if (value == 0)
        throw ParseError(source, line, tok.column, std::string("expected a positive integer ") + what + ", got '" +
                                                       std::string(s) + "'");
    return value;
}

}  // namespace

Matrix parse_matrix(std::string_view text, const std::string& source) {
    const auto lines = data_lines(text);
    if (lines.empty()) throw ParseError(source, 1, 1, "empty matrix file; expected the dimension n");
    const auto& header = lines.front();
    if (header.tokens.size() != 1)
        throw ParseError(source, header.number, header.tokens[1].column, "dimension line must hold a single integer");
    const auto n = parse_positive(header.tokens.front(), source, header.number, "dimension");

    if (lines.size() - 1 < n)
        throw ParseError(source, lines.back().number + 1, 1,
                         "expected " + std::to_string(n) + " rows, found " + std::to_string(lines.size() - 1));
    if (lines.size() - 1 > n)
        throw ParseError(source, lines[n + 1].number, 1, "unexpected data after " + std::to_string(n) + " rows");

    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto& row = lines[i + 1];
        if (row.tokens.size() != n) {
            auto col = row.tokens.size() > n ? row.tokens[n].column : row.tokens.back().column;
            throw ParseError(source, row.number, col,
                             "row " + std::to_string(i + 1) + " has " + std::to_string(row.tokens.size()) +
                                 " entries, expected " + std::to_string(n));
        }
        for (std::size_t j = 0; j < n; ++j) {
            auto value = parse_scalar(row.tokens[j].text);
            if (!value)
                throw ParseError(source, row.number, row.tokens[j].column,
                                 "malformed entry '" + std::string(row.tokens[j].text) + "'");
            m(i, j) = std::move(*value);
        }
    }
    return m;
}

Matrix read_matrix_file(const std::filesystem::path& path) { return parse_matrix(slurp(path), path.string()); }

std::string format_matrix(const Matrix& a) {
    std::string out = std::to_string(a.size()) + "\n";
    out += to_string(a);
    return out;
}

Schedule parse_schedule(std::string_view text, const std::string& source) {
    std::vector<Phase> phases;
    for (const auto& line : data_lines(text)) {
        const auto& t = line.tokens;
        if (t[0].text != "phase")
            throw ParseError(source, line.number, t[0].column,
                             "expected 'phase <matrix-name> <length>', got '" + std::string(t[0].text) + "'");
        if (t.size() != 3)
            throw ParseError(source, line.number, t.back().column, "expected 'phase <matrix-name> <length>'");
        phases.push_back({std::string(t[1].text), parse_positive(t[2], source, line.number, "phase length")});
    }
    if (phases.empty()) throw ParseError(source, 1, 1, "schedule has no phases");
    return Schedule(std::move(phases));
}

Schedule read_schedule_file(const std::filesystem::path& path) { return parse_schedule(slurp(path), path.string()); }

std::string format_schedule(const Schedule& schedule) {
    std::string out;
    for (const auto& p : schedule.phases()) out += "phase " + p.matrix + " " + std::to_string(p.length) + "\n";
    return out;
}

Vector parse_vector(std::string_view text) {
    std::vector<Scalar> entries;
    for (const auto& tok : tokenize(text, ',')) {
        auto value = parse_scalar(tok.text);
        if (!value) throw ParseError("<vector>", 1, tok.column, "malformed entry '" + std::string(tok.text) + "'");
        entries.push_back(std::move(*value));
    }
    if (entries.empty()) throw ParseError("<vector>", 1, 1, "empty vector");
    return Vector(std::move(entries));
}

std::string trace_to_csv(const Trace& trace) {
    const std::size_t n = trace.states.empty() ? 0 : trace.states.front().size();
    std::string out = "k,matrix";
    for (std::size_t i = 1; i <= n; ++i) out += ",x" + std::to_string(i);
    out += '\n';
    for (std::size_t k = 0; k < trace.states.size(); ++k) {
        out += std::to_string(k) + "," + trace.schedule.phases()[trace.schedule.phase_at(k)].matrix;
        for (const auto& s : trace.states[k]) out += "," + s.to_string();
        out += '\n';
    }
    return out;
}

}  // namespace maxplus

#include "toric/ingest.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <regex>
#include <sstream>

namespace toric {

namespace fs = std::filesystem;

std::string_view to_string(InputKind kind) {
    switch (kind) {
    case InputKind::DualPolytope: return "dual-polytope";
    case InputKind::FanPolytope: return "fan-polytope";
    case InputKind::Fan: return "fan";
    }
    return "?";
}

InputKind parse_kind(std::string_view name) {
    if (name == "dual-polytope") return InputKind::DualPolytope;
    if (name == "fan-polytope") return InputKind::FanPolytope;
    if (name == "fan") return InputKind::Fan;
    throw Error(ErrorCode::SyntaxError, "unknown kind '" + std::string(name) + "'");
}

InputFormat parse_format(std::string_view name) {
    if (name == "native") return InputFormat::Native;
    if (name == "polymake") return InputFormat::Polymake;
    throw Error(ErrorCode::SyntaxError, "unknown format '" + std::string(name) + "'");
}

int InputRecord::dim() const {
    return std::visit([](const auto& p) { return p.dim(); }, payload);
}

Fan to_fan(const InputRecord& record) {
    if (const Fan* fan = std::get_if<Fan>(&record.payload)) return *fan;
    const auto& polytope = std::get<LatticePolytope>(record.payload);
    return record.kind == InputKind::DualPolytope ? fan_from_dual(polytope) : fan_from_fan_polytope(polytope);
}

InputRecord resolve_kind(InputRecord record) {
    if (record.kind == InputKind::Fan) return record;
    std::string why;
    for (InputKind kind : {InputKind::DualPolytope, InputKind::FanPolytope}) {
        record.kind = kind;
        try {
            require_valid(to_fan(record));
            return record;
        } catch (const Error& e) {
            why += std::string(why.empty() ? "" : "; ") + std::string(to_string(kind)) + ": " + e.what();
        }
    }
    throw Error(ErrorCode::NotSmooth, "no reading of " + record.id + " gives a smooth fan (" + why + ")");
}

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, "cannot open " + path.string());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool is_integer_token(std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
}

std::string at_line(std::size_t line) { return "line " + std::to_string(line); }

Integer parse_integer(std::string_view token, std::size_t line) {
    if (!is_integer_token(token)) {
        throw Error(ErrorCode::NonIntegerToken, at_line(line) + ": '" + std::string(token) + "'");
    }
    if (token[0] == '+') token.remove_prefix(1);
    return Integer(std::string(token));
}

std::vector<std::string> split_ws(std::string_view s) {
    std::vector<std::string> out;
    std::istringstream is{std::string(s)};
    std::string t;
    while (is >> t) out.push_back(t);
    return out;
}

// Non-empty, comment-stripped lines with their 1-based line numbers.
std::vector<std::pair<std::size_t, std::vector<std::string>>> native_lines(std::string_view text) {
    std::vector<std::pair<std::size_t, std::vector<std::string>>> out;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++line_no;
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (!tokens.empty()) out.emplace_back(line_no, std::move(tokens));
        if (end == text.size()) break;
        pos = end + 1;
    }
    return out;
}

}  // namespace

InputRecord parse_native(std::string_view text, std::string id) {
    const auto lines = native_lines(text);
    std::size_t cur = 0;
    auto expect_keyword = [&](std::initializer_list<std::string_view> keywords) -> const auto& {
        if (cur >= lines.size()) {
            throw Error(ErrorCode::SyntaxError, "unexpected end of file, expected '" +
                                                    std::string(*keywords.begin()) + "'");
        }
        const auto& [no, tokens] = lines[cur];
        if (tokens.size() != 2 ||
            std::find(keywords.begin(), keywords.end(), tokens[0]) == keywords.end()) {
            throw Error(ErrorCode::SyntaxError,
                        at_line(no) + ": expected '" + std::string(*keywords.begin()) + " <value>'");
        }
        ++cur;
        return lines[cur - 1];
    };
    auto count_of = [&](const std::pair<std::size_t, std::vector<std::string>>& line) {
        Integer v = parse_integer(line.second[1], line.first);
        if (v < 0 || v > 100000000) throw Error(ErrorCode::SyntaxError, at_line(line.first) + ": bad count");
        return static_cast<std::size_t>(v);
    };

    const auto& kind_line = expect_keyword({"kind"});
    InputKind kind;
    try {
        kind = parse_kind(kind_line.second[1]);
    } catch (const Error&) {
        throw Error(ErrorCode::SyntaxError, at_line(kind_line.first) + ": unknown kind '" + kind_line.second[1] + "'");
    }
    const auto& dim_line = expect_keyword({"dim"});
    const std::size_t d = count_of(dim_line);
    if (d < 1) throw Error(ErrorCode::SyntaxError, at_line(dim_line.first) + ": dim must be positive");
    const std::size_t m = count_of(expect_keyword({"rays", "vertices"}));

    auto read_rows = [&](std::size_t count) {
        std::vector<std::pair<std::size_t, std::vector<Integer>>> rows;
        for (std::size_t r = 0; r < count; ++r) {
            if (cur >= lines.size()) throw Error(ErrorCode::SyntaxError, "unexpected end of file in data rows");
            const auto& [no, tokens] = lines[cur++];
            if (tokens.size() != d) {
                throw Error(ErrorCode::DimensionMismatch, at_line(no) + ": expected " + std::to_string(d) +
                                                              " entries, found " + std::to_string(tokens.size()));
            }
            std::vector<Integer> row;
            for (const auto& t : tokens) row.push_back(parse_integer(t, no));
            rows.emplace_back(no, std::move(row));
        }
        return rows;
    };

    std::vector<LatticeVector> points;
    for (auto& [no, row] : read_rows(m)) {
        LatticeVector v(static_cast<Index>(d));
        for (std::size_t i = 0; i < d; ++i) v(static_cast<Index>(i)) = row[i];
        points.push_back(std::move(v));
    }

    InputRecord rec{std::move(id), kind, LatticePolytope(static_cast<int>(d), {})};
    if (kind == InputKind::Fan) {
        const std::size_t k = count_of(expect_keyword({"maxcones"}));
        std::vector<IndexSet> cones;
        for (auto& [no, row] : read_rows(k)) {
            IndexSet cone;
            for (const auto& idx : row) {
                if (idx < 0 || idx >= m) {
                    throw Error(ErrorCode::SyntaxError, at_line(no) + ": ray index " + idx.str() + " out of range");
                }
                cone.push_back(static_cast<int>(idx));
            }
            cones.push_back(std::move(cone));
        }
        rec.payload = Fan(static_cast<int>(d), std::move(points), std::move(cones));
    } else {
        rec.payload = LatticePolytope(static_cast<int>(d), std::move(points));
    }
    if (cur != lines.size()) {
        throw Error(ErrorCode::SyntaxError, at_line(lines[cur].first) + ": unexpected trailing content");
    }
    return rec;
}

InputRecord read_native(const fs::path& path) { return parse_native(read_file(path), path.filename().string()); }

std::string format_native(const InputRecord& record) {
    std::ostringstream os;
    auto write_rows = [&](const std::vector<LatticeVector>& rows) {
        for (const auto& v : rows) {
            for (Index i = 0; i < v.size(); ++i) os << (i ? " " : "") << v(i);
            os << '\n';
        }
    };
    os << "kind " << to_string(record.kind) << '\n';
    os << "dim " << record.dim() << '\n';
    if (const Fan* fan = std::get_if<Fan>(&record.payload)) {
        os << "rays " << fan->n_rays() << '\n';
        write_rows(fan->rays());
        os << "maxcones " << fan->n_max_cones() << '\n';
        for (const auto& cone : fan->max_cones()) {
            for (std::size_t i = 0; i < cone.size(); ++i) os << (i ? " " : "") << cone[i];
            os << '\n';
        }
    } else {
        const auto& p = std::get<LatticePolytope>(record.payload);
        os << "vertices " << p.vertices().size() << '\n';
        write_rows(p.vertices());
    }
    return os.str();
}

void write_native(const InputRecord& record, const fs::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Io, "cannot write " + path.string());
    out << format_native(record);
    if (!out) throw Error(ErrorCode::Io, "write failed for " + path.string());
}

// ---------------------------------------------------------------------------
// Polymake
// ---------------------------------------------------------------------------

namespace {

struct RawRow {
    std::size_t line;
    std::vector<std::string> tokens;
};

std::size_t line_of(std::string_view text, std::size_t offset) {
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

std::vector<RawRow> plain_vertices(std::string_view text) {
    std::vector<RawRow> rows;
    bool in_section = false;
    std::size_t no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        ++no;
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        const bool comment_only = line.find_first_not_of(" \t\r") != std::string_view::npos &&
                                  line[line.find_first_not_of(" \t\r")] == '#';
        if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        auto tokens = split_ws(line);
        if (!in_section) {
            in_section = tokens.size() == 1 && tokens[0] == "VERTICES";
        } else if (comment_only) {
            continue;
        } else if (tokens.empty()) {
            break;  // a blank line ends the section
        } else if (tokens.size() == 1 && std::regex_match(tokens[0], std::regex("[A-Z_][A-Z0-9_]*"))) {
            break;
        } else if (tokens[0].front() == '(') {
            throw Error(ErrorCode::SyntaxError, at_line(no) + ": sparse rows are not supported");
        } else {
            rows.push_back({no, std::move(tokens)});
        }
        if (end == text.size()) break;
    }
    if (!in_section) throw Error(ErrorCode::VerticesMissing, "no VERTICES section");
    return rows;
}

std::vector<RawRow> xml_vertices(std::string_view text) {
    const std::regex open(R"(<property\s+name\s*=\s*"VERTICES"[^>]*>)");
    std::cmatch m;
    if (!std::regex_search(text.begin(), text.end(), m, open)) {
        throw Error(ErrorCode::VerticesMissing, "no VERTICES property");
    }
    const std::size_t body_start = static_cast<std::size_t>(m.position(0) + m.length(0));
    std::size_t body_end = text.find("</property>", body_start);
    if (body_end == std::string_view::npos) throw Error(ErrorCode::SyntaxError, "unterminated VERTICES property");
    const std::string_view body = text.substr(body_start, body_end - body_start);

    std::vector<RawRow> rows;
    const std::regex row(R"(<v(\s[^>]*)?>([^<]*)</v>)");
    for (std::cregex_iterator it(body.begin(), body.end(), row), end; it != end; ++it) {
        const std::size_t offset = body_start + static_cast<std::size_t>(it->position(0));
        if ((*it)[1].matched && std::string((*it)[1]).find("dim") != std::string::npos) {
            throw Error(ErrorCode::SyntaxError, at_line(line_of(text, offset)) + ": sparse rows are not supported");
        }
        rows.push_back({line_of(text, offset), split_ws(std::string((*it)[2]))});
    }
    return rows;
}

const nlohmann::json* find_key(const nlohmann::json& j, const std::string& key) {
    if (j.is_object()) {
        if (auto it = j.find(key); it != j.end()) return &*it;
        for (const auto& [k, v] : j.items()) {
            if (const auto* found = find_key(v, key)) return found;
        }
    } else if (j.is_array()) {
        for (const auto& v : j) {
            if (const auto* found = find_key(v, key)) return found;
        }
    }
    return nullptr;
}

std::vector<RawRow> json_vertices(std::string_view text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw Error(ErrorCode::SyntaxError, e.what());
    }
    const nlohmann::json* v = find_key(j, "VERTICES");
    if (!v) throw Error(ErrorCode::VerticesMissing, "no VERTICES key");
    if (!v->is_array()) throw Error(ErrorCode::SyntaxError, "VERTICES is not an array");
    std::vector<RawRow> rows;
    std::size_t r = 0;
    for (const auto& row : *v) {
        ++r;
        if (!row.is_array()) throw Error(ErrorCode::SyntaxError, "VERTICES row " + std::to_string(r) + " is not dense");
        RawRow raw{r, {}};
        for (const auto& e : row) {
            if (e.is_number_integer()) {
                raw.tokens.push_back(e.dump());
            } else if (e.is_string()) {
                raw.tokens.push_back(e.get<std::string>());
            } else {
                raw.tokens.push_back(e.dump());  // rejected below as non-integral
            }
        }
        rows.push_back(std::move(raw));
    }
    return rows;
}

}  // namespace

InputRecord parse_polymake_vertices(std::string_view text, std::string id, InputKind kind) {
    if (kind == InputKind::Fan) throw Error(ErrorCode::SyntaxError, "polymake VERTICES cannot describe a fan");
    const auto first = text.find_first_not_of(" \t\r\n");
    std::vector<RawRow> rows;
    if (first != std::string_view::npos && text[first] == '{') {
        rows = json_vertices(text);
    } else if (text.find("<property") != std::string_view::npos) {
        rows = xml_vertices(text);
    } else {
        rows = plain_vertices(text);
    }
    if (rows.empty()) throw Error(ErrorCode::VerticesMissing, "VERTICES section is empty");

    const std::size_t width = rows.front().tokens.size();
    if (width < 2) throw Error(ErrorCode::DimensionMismatch, at_line(rows.front().line) + ": row too short");
    const int d = static_cast<int>(width - 1);
    std::vector<LatticeVector> vertices;
    for (const auto& row : rows) {
        if (row.tokens.size() != width) {
            throw Error(ErrorCode::DimensionMismatch, at_line(row.line) + ": expected " + std::to_string(width) +
                                                          " entries, found " + std::to_string(row.tokens.size()));
        }
        const Integer lead = parse_integer(row.tokens[0], row.line);
        if (lead != 1) {
            throw Error(ErrorCode::NotAffineVertex, at_line(row.line) + ": leading coordinate " + lead.str());
        }
        LatticeVector v(d);
        for (int i = 0; i < d; ++i) v(i) = parse_integer(row.tokens[static_cast<std::size_t>(i + 1)], row.line);
        vertices.push_back(std::move(v));
    }
    return InputRecord{std::move(id), kind, LatticePolytope(d, std::move(vertices))};
}

InputRecord read_polymake_vertices(const fs::path& path, InputKind kind) {
    return parse_polymake_vertices(read_file(path), path.filename().string(), kind);
}

InputRecord read_input(const fs::path& path, std::optional<InputKind> kind, InputFormat format, std::string id) {
    InputRecord rec = format == InputFormat::Native
                          ? parse_native(read_file(path), std::move(id))
                          : parse_polymake_vertices(read_file(path), std::move(id),
                                                    kind.value_or(InputKind::DualPolytope));
    if (format == InputFormat::Native && kind && *kind != rec.kind) {
        throw Error(ErrorCode::SyntaxError, path.string() + " declares kind " + std::string(to_string(rec.kind)) +
                                                ", expected " + std::string(to_string(*kind)));
    }
    return rec;
}

std::vector<fs::path> list_input_files(const fs::path& dir) {
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) throw Error(ErrorCode::Io, "not a directory: " + dir.string());
    std::vector<fs::path> files;
    for (auto it = fs::recursive_directory_iterator(dir, ec); !ec && it != fs::recursive_directory_iterator();
         it.increment(ec)) {
        const auto name = it->path().filename().string();
        if (!name.empty() && name.front() == '.') {
            if (it->is_directory()) it.disable_recursion_pending();
            continue;
        }
        if (it->is_regular_file()) files.push_back(fs::relative(it->path(), dir));
    }
    if (ec) throw Error(ErrorCode::Io, "cannot list " + dir.string() + ": " + ec.message());
    std::sort(files.begin(), files.end(),
              [](const fs::path& a, const fs::path& b) { return a.generic_string() < b.generic_string(); });
    return files;
}

std::vector<BatchInput> batch_reader(const fs::path& dir, std::optional<InputKind> kind, InputFormat format,
                                     bool strict) {
    std::vector<BatchInput> out;
    for (const auto& rel : list_input_files(dir)) {
        BatchInput in{rel.generic_string(), dir / rel, std::nullopt, std::nullopt};
        try {
            in.record = read_input(in.path, kind, format, in.id);
        } catch (const std::exception& e) {
            if (strict) throw;
            in.error = e.what();
        }
        out.push_back(std::move(in));
    }
    return out;
}

}  // namespace toric

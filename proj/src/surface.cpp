#include "cuspidal/surface.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

namespace cusp {

double Domain::diameter() const { return std::hypot(u_max - u_min, v_max - v_min); }

SurfaceFileError::SurfaceFileError(const std::string& origin, int line, int column, const std::string& message)
    : std::runtime_error(line > 0 ? origin + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + message
                                  : origin + ": " + message),
      line_(line),
      column_(column) {}

namespace {

std::string_view trim(std::string_view s, std::size_t* lead = nullptr) {
    std::size_t a = 0;
    while (a < s.size() && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    std::size_t b = s.size();
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    if (lead) *lead = a;
    return s.substr(a, b - a);
}

struct Entry {
    std::string value;
    int line = 0;
    int column = 0;  // column of the value's first character
};

double parse_real(std::string_view text, const std::string& origin, int line, int column) {
    // Real-valued keys accept full expressions (pi, 2*pi, ...) evaluated at the origin.
    try {
        return eval_scalar(parse_expression(text), 0.0, 0.0);
    } catch (const std::exception& e) {
        throw SurfaceFileError(origin, line, column, std::string("invalid number: ") + e.what());
    }
}

std::pair<double, double> parse_range(const Entry& e, const std::string& key, const std::string& origin) {
    std::string_view s = trim(e.value);
    int col = e.column;
    if (!s.empty() && s.front() == '[') {
        if (s.back() != ']') throw SurfaceFileError(origin, e.line, col, key + ": missing ']'");
        s = s.substr(1, s.size() - 2);
        ++col;
    }
    const auto comma = s.find(',');
    if (comma == std::string_view::npos) throw SurfaceFileError(origin, e.line, col, key + ": expected 'min, max'");
    const double lo = parse_real(trim(s.substr(0, comma)), origin, e.line, col);
    const double hi = parse_real(trim(s.substr(comma + 1)), origin, e.line, col + static_cast<int>(comma) + 1);
    if (!(lo < hi)) throw SurfaceFileError(origin, e.line, col, key + ": empty range (min must be < max)");
    return {lo, hi};
}

}  // namespace

SurfaceDefinition parse_surface_text(std::string_view text, const std::string& origin) {
    std::map<std::string, Entry> entries;
    bool in_surface = false, seen_section = false;
    int line_no = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view raw = text.substr(start, end - start);
        start = end + 1;
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::size_t lead = 0;
        const std::string_view line = trim(raw, &lead);
        if (line.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (line.front() == '[') {
            if (line.back() != ']') throw SurfaceFileError(origin, line_no, static_cast<int>(lead) + 1, "malformed section header");
            const auto section = trim(line.substr(1, line.size() - 2));
            in_surface = (section == "surface");
            seen_section = seen_section || in_surface;
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string_view::npos)
            throw SurfaceFileError(origin, line_no, static_cast<int>(lead) + 1, "expected 'key = value'");
        if (!in_surface) {
            if (seen_section) continue;  // keys of other sections are ignored
            throw SurfaceFileError(origin, line_no, static_cast<int>(lead) + 1, "key outside of [surface] section");
        }
        const std::string key(trim(line.substr(0, eq)));
        std::size_t vlead = 0;
        const std::string_view value = trim(line.substr(eq + 1), &vlead);
        if (entries.count(key)) throw SurfaceFileError(origin, line_no, static_cast<int>(lead) + 1, "duplicate key " + key);
        entries[key] = Entry{std::string(value), line_no, static_cast<int>(lead + eq + 1 + vlead) + 1};
        if (end == text.size()) break;
    }
    if (!seen_section) throw SurfaceFileError(origin, 0, 0, "missing [surface] section");

    static const char* known[] = {"name", "x", "y", "z", "u_range", "v_range", "co_orientation"};
    for (const auto& [key, e] : entries) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) throw SurfaceFileError(origin, e.line, 1, "unknown key " + key);
    }
    for (const char* k : {"x", "y", "z", "u_range", "v_range"})
        if (!entries.count(k)) throw SurfaceFileError(origin, 0, 0, std::string("missing key ") + k);

    SurfaceDefinition s;
    if (entries.count("name")) s.name = entries["name"].value;
    auto expr = [&](const char* key) {
        const Entry& e = entries[key];
        try {
            return parse_expression(e.value);
        } catch (const ParseError& err) {
            throw SurfaceFileError(origin, e.line, e.column + static_cast<int>(err.position()),
                                   std::string(key) + ": " + err.what());
        }
    };
    s.x = expr("x");
    s.y = expr("y");
    s.z = expr("z");
    std::tie(s.domain.u_min, s.domain.u_max) = parse_range(entries["u_range"], "u_range", origin);
    std::tie(s.domain.v_min, s.domain.v_max) = parse_range(entries["v_range"], "v_range", origin);
    if (entries.count("co_orientation")) {
        const Entry& e = entries["co_orientation"];
        std::string_view v = e.value;
        if (!v.empty() && v.front() == '+') v.remove_prefix(1);
        const double c = parse_real(std::string(v), origin, e.line, e.column);
        if (c != 1.0 && c != -1.0) throw SurfaceFileError(origin, e.line, e.column, "co_orientation must be +1 or -1");
        s.co_orientation = static_cast<int>(c);
    }
    return s;
}

SurfaceDefinition load_surface_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SurfaceFileError(path.string(), 0, 0, "cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    SurfaceDefinition s = parse_surface_text(ss.str(), path.string());
    return s;
}

std::string to_surface_text(const SurfaceDefinition& s) {
    auto num = [](double x) {
        char buf[64];
        const auto r = std::to_chars(buf, buf + sizeof buf, x);
        return std::string(buf, r.ptr);
    };
    std::ostringstream os;
    os << "[surface]\n";
    os << "name = " << s.name << "\n";
    os << "x = " << to_string(s.x) << "\n";
    os << "y = " << to_string(s.y) << "\n";
    os << "z = " << to_string(s.z) << "\n";
    os << "u_range = " << num(s.domain.u_min) << ", " << num(s.domain.u_max) << "\n";
    os << "v_range = " << num(s.domain.v_min) << ", " << num(s.domain.v_max) << "\n";
    os << "co_orientation = " << s.co_orientation << "\n";
    return os.str();
}

Eigen::Vector3d surface_point(const SurfaceDefinition& s, double u, double v) {
    return {eval_scalar(s.x, u, v), eval_scalar(s.y, u, v), eval_scalar(s.z, u, v)};
}

JetVec2d surface_jet(const SurfaceDefinition& s, double u, double v, int order) {
    return {eval_jet(s.x, u, v, order), eval_jet(s.y, u, v, order), eval_jet(s.z, u, v, order)};
}

JetVec2d pullback(const SurfaceDefinition& s, const Jet2& U, const Jet2& V) {
    return {eval_jet(s.x, U, V), eval_jet(s.y, U, V), eval_jet(s.z, U, V)};
}

SurfaceDefinition rigid_motion(const SurfaceDefinition& s, const Eigen::Matrix3d& R, const Eigen::Vector3d& b) {
    SurfaceDefinition out = s;
    const Expr f[3] = {s.x, s.y, s.z};
    Expr g[3];
    for (int i = 0; i < 3; ++i) {
        Expr acc = make_number(b[i]);
        for (int j = 0; j < 3; ++j) acc = acc + make_number(R(i, j)) * f[j];
        g[i] = Expr(acc.ptr(), to_string(acc));
    }
    out.x = g[0];
    out.y = g[1];
    out.z = g[2];
    return out;
}

SurfaceDefinition reparametrize(const SurfaceDefinition& s, const Expr& U, const Expr& V, const Domain& domain) {
    SurfaceDefinition out = s;
    out.x = substitute(s.x, U, V);
    out.y = substitute(s.y, U, V);
    out.z = substitute(s.z, U, V);
    out.domain = domain;
    return out;
}

}  // namespace cusp

#include "latres/io.hpp"
#include "latres/error.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace latres
{

namespace
{

std::vector<std::string> split_ws(const std::string& s)
{
    std::istringstream is(s);
    std::vector<std::string> out;
    for (std::string tok; is >> tok;)
        out.push_back(tok);
    return out;
}

long parse_number(const std::string& tok, std::size_t line)
{
    long v = 0;
    const auto* first = tok.data();
    const auto* last = tok.data() + tok.size();
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || v < 0)
        throw ParseError(line, "expected a nonnegative integer, got '" + tok + "'");
    return v;
}

} // namespace

Diagram parse_diagram(std::istream& in)
{
    std::string raw;
    std::size_t lineno = 0;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, raw))
        {
            ++lineno;
            const auto pos = raw.find_first_not_of(" \t\r");
            if (pos == std::string::npos || raw[pos] == '#')
                continue;
            out = raw;
            if (!out.empty() && out.back() == '\r')
                out.pop_back();
            return true;
        }
        return false;
    };

    std::string line;
    if (!next_line(line))
        throw ParseError(lineno, "empty input; expected 'latdiag 1'");
    auto toks = split_ws(line);
    if (toks.size() != 2 || toks[0] != "latdiag")
        throw ParseError(lineno, "expected header 'latdiag <version>'");
    if (toks[1] != "1")
        throw ParseError(lineno, "unsupported latdiag version '" + toks[1] + "'");

    if (!next_line(line))
        throw ParseError(lineno, "missing 'n <count>' line");
    toks = split_ws(line);
    if (toks.size() != 2 || toks[0] != "n")
        throw ParseError(lineno, "expected 'n <count>'");
    const long n = parse_number(toks[1], lineno);
    if (n > 1'000'000)
        throw ParseError(lineno, "element count too large");

    CoverLists upper(n), lower(n);
    std::vector<bool> seen_u(n, false), seen_l(n, false);
    for (long k = 0; k < 2 * n; ++k)
    {
        if (!next_line(line))
            throw ParseError(lineno, "unexpected end of input: expected " + std::to_string(2 * n) +
                                         " cover lines");
        const auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError(lineno, "expected '<u|l> <id>: ...'");
        const auto head = split_ws(line.substr(0, colon));
        if (head.size() != 2 || (head[0] != "u" && head[0] != "l"))
            throw ParseError(lineno, "expected '<u|l> <id>:'");
        const bool is_upper = head[0] == "u";
        if (is_upper != (k < n))
            throw ParseError(lineno, is_upper ? "upper-cover line after lower-cover lines"
                                              : "lower-cover line before all upper-cover lines");
        const long id = parse_number(head[1], lineno);
        if (id >= n)
            throw ParseError(lineno, "element id " + std::to_string(id) + " out of range");
        auto& seen = is_upper ? seen_u : seen_l;
        if (seen[id])
            throw ParseError(lineno, "duplicate line for element " + std::to_string(id));
        seen[id] = true;
        auto& list = is_upper ? upper[id] : lower[id];
        std::vector<bool> in_list(n, false);
        for (const auto& tok : split_ws(line.substr(colon + 1)))
        {
            const long c = parse_number(tok, lineno);
            if (c >= n)
                throw ParseError(lineno, "cover id " + std::to_string(c) + " out of range");
            if (in_list[c])
                throw ParseError(lineno, "duplicate id " + std::to_string(c) + " in cover list");
            in_list[c] = true;
            list.push_back(static_cast<ElementId>(c));
        }
    }
    if (next_line(line))
        throw ParseError(lineno, "trailing content after cover lists");
    return Diagram(std::move(upper), std::move(lower));
}

Diagram parse_diagram(const std::string& text)
{
    std::istringstream is(text);
    return parse_diagram(is);
}

Diagram read_diagram(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in)
        throw LatresError("cannot open " + path.string());
    return parse_diagram(in);
}

void write_diagram(std::ostream& out, const Diagram& d)
{
    out << "latdiag 1\n" << "n " << d.size() << "\n";
    for (ElementId x = 0; x < d.size(); ++x)
    {
        out << "u " << x << ":";
        for (ElementId y : d.upper(x))
            out << ' ' << y;
        out << "\n";
    }
    for (ElementId x = 0; x < d.size(); ++x)
    {
        out << "l " << x << ":";
        for (ElementId y : d.lower(x))
            out << ' ' << y;
        out << "\n";
    }
}

std::string format_diagram(const Diagram& d)
{
    std::ostringstream os;
    write_diagram(os, d);
    return os.str();
}

void save_diagram(const std::filesystem::path& path, const Diagram& d)
{
    std::ofstream out(path);
    if (!out)
        throw LatresError("cannot write " + path.string());
    write_diagram(out, d);
}

} // namespace latres

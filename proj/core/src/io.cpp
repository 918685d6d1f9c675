#include "crosscomp/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "crosscomp/errors.hpp"

namespace crosscomp {

namespace {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

struct Line {
    std::size_t number;
    std::vector<Token> tokens;
};

// Splits into non-blank, non-comment lines of whitespace-separated tokens.
std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos)
            end = text.size();
        std::string_view raw = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        if (!raw.empty() && raw.back() == '\r')
            raw.remove_suffix(1);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t'))
                ++i;
            std::size_t start = i;
            while (i < raw.size() && raw[i] != ' ' && raw[i] != '\t')
                ++i;
            if (i > start)
                line.tokens.push_back({raw.substr(start, i - start), start + 1});
        }
        if (line.tokens.empty() || line.tokens[0].text == "c")
            continue;
        out.push_back(std::move(line));
    }
    return out;
}

std::int64_t to_int(const Token& tok, std::size_t line) {
    std::int64_t value = 0;
    const char* first = tok.text.data();
    const char* last = first + tok.text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw ParseError(ParseErrorKind::Syntax, line, tok.column,
                         "expected an integer, found '" + std::string(tok.text) + "'");
    return value;
}

[[noreturn]] void fail(ParseErrorKind kind, const Line& line, std::size_t token, const std::string& message) {
    const std::size_t column = token < line.tokens.size() ? line.tokens[token].column : 0;
    throw ParseError(kind, line.number, column, message);
}

void expect_args(const Line& line, std::size_t count) {
    if (line.tokens.size() != count + 1)
        fail(ParseErrorKind::Syntax, line, std::min(line.tokens.size() - 1, count + 1),
             "'" + std::string(line.tokens[0].text) + "' takes " + std::to_string(count) + " argument(s)");
}

struct Stanza {
    std::size_t line = 0;  // 0 = absent
    explicit operator bool() const { return line != 0; }
};

struct RawGraphFile {
    std::size_t header_line = 0;
    int n = 0;
    std::int64_t m = 0;
    std::vector<Edge> edges;
    Stanza l_at, z_at, px_at, py_at, w_at, prob_at;
    std::int64_t ell = 0;
    std::vector<Vertex> z, px, py;
    std::vector<std::int64_t> weights;  // 0 = unset
    std::size_t weight_count = 0;
    Problem problem = Problem::Bare;
};

Vertex to_vertex(const Line& line, std::size_t token, int n) {
    std::int64_t v = to_int(line.tokens[token], line.number);
    if (v < 1 || v > n)
        fail(ParseErrorKind::InvariantViolation, line, token,
             "vertex " + std::to_string(v) + " outside 1.." + std::to_string(n));
    return static_cast<Vertex>(v - 1);
}

std::vector<Vertex> vertex_list(const Line& line, int n) {
    std::vector<Vertex> out;
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 1; i < line.tokens.size(); ++i) {
        Vertex v = to_vertex(line, i, n);
        if (seen[v]++)
            fail(ParseErrorKind::InvariantViolation, line, i, "vertex " + std::to_string(v + 1) + " listed twice");
        out.push_back(v);
    }
    return out;
}

void once(Stanza& stanza, const Line& line) {
    if (stanza)
        fail(ParseErrorKind::Syntax, line, 0,
             "repeated '" + std::string(line.tokens[0].text) + "' stanza (first on line " +
                 std::to_string(stanza.line) + ")");
    stanza.line = line.number;
}

RawGraphFile read_raw(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(ParseErrorKind::Syntax, 1, 0, "missing 'p edge' header");
    RawGraphFile raw;
    const Line& header = lines[0];
    if (header.tokens[0].text != "p" || header.tokens.size() < 2 || header.tokens[1].text != "edge")
        fail(ParseErrorKind::Syntax, header, 0, "expected 'p edge <n> <m>' header");
    if (header.tokens.size() != 4)
        fail(ParseErrorKind::Syntax, header, std::min<std::size_t>(header.tokens.size(), 4),
             "header takes exactly two counts");
    const std::int64_t n = to_int(header.tokens[2], header.number);
    raw.m = to_int(header.tokens[3], header.number);
    if (n < 0 || n > 1'000'000)
        fail(ParseErrorKind::Syntax, header, 2, "vertex count out of range");
    if (raw.m < 0)
        fail(ParseErrorKind::Syntax, header, 3, "negative edge count");
    raw.n = static_cast<int>(n);
    raw.header_line = header.number;
    raw.weights.assign(static_cast<std::size_t>(raw.n), 0);

    std::vector<std::vector<Vertex>> seen_edges(static_cast<std::size_t>(raw.n));
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        const std::string_view key = line.tokens[0].text;
        if (key == "e") {
            expect_args(line, 2);
            Vertex u = to_vertex(line, 1, raw.n);
            Vertex v = to_vertex(line, 2, raw.n);
            if (u == v)
                fail(ParseErrorKind::InvariantViolation, line, 1, "self-loop at vertex " + std::to_string(u + 1));
            if (u > v)
                std::swap(u, v);
            auto& row = seen_edges[u];
            if (std::find(row.begin(), row.end(), v) != row.end())
                fail(ParseErrorKind::InvariantViolation, line, 1,
                     "repeated edge " + std::to_string(u + 1) + "-" + std::to_string(v + 1));
            row.push_back(v);
            raw.edges.emplace_back(u, v);
        } else if (key == "l") {
            once(raw.l_at, line);
            expect_args(line, 1);
            raw.ell = to_int(line.tokens[1], line.number);
            if (raw.ell < 0)
                fail(ParseErrorKind::InvariantViolation, line, 1, "negative budget");
        } else if (key == "z") {
            once(raw.z_at, line);
            raw.z = vertex_list(line, raw.n);
        } else if (key == "px") {
            once(raw.px_at, line);
            raw.px = vertex_list(line, raw.n);
        } else if (key == "py") {
            once(raw.py_at, line);
            raw.py = vertex_list(line, raw.n);
        } else if (key == "w") {
            expect_args(line, 2);
            Vertex v = to_vertex(line, 1, raw.n);
            std::int64_t weight = to_int(line.tokens[2], line.number);
            if (weight < 1)
                fail(ParseErrorKind::InvariantViolation, line, 2, "vertex weights must be positive");
            if (raw.weights[v])
                fail(ParseErrorKind::InvariantViolation, line, 1,
                     "second weight for vertex " + std::to_string(v + 1));
            raw.weights[v] = weight;
            ++raw.weight_count;
            raw.w_at.line = line.number;
        } else if (key == "prob") {
            once(raw.prob_at, line);
            expect_args(line, 1);
            auto p = problem_from_tag(line.tokens[1].text);
            if (!p)
                fail(ParseErrorKind::UnknownTag, line, 1, "unknown problem tag '" + std::string(line.tokens[1].text) + "'");
            raw.problem = *p;
        } else if (key == "p") {
            fail(ParseErrorKind::Syntax, line, 0, "second header line");
        } else {
            fail(ParseErrorKind::Syntax, line, 0, "unknown line type '" + std::string(key) + "'");
        }
    }
    if (static_cast<std::int64_t>(raw.edges.size()) != raw.m)
        throw ParseError(ParseErrorKind::CountMismatch, raw.header_line, header.tokens[3].column,
                         "header declares " + std::to_string(raw.m) + " edges, body has " +
                             std::to_string(raw.edges.size()));
    if (raw.weight_count != 0 && raw.weight_count != static_cast<std::size_t>(raw.n))
        throw ParseError(ParseErrorKind::CountMismatch, raw.w_at.line, 0,
                         std::to_string(raw.weight_count) + " weights for " + std::to_string(raw.n) +
                             " vertices; give all or none");
    return raw;
}

std::size_t where(const RawGraphFile& raw) { return raw.prob_at ? raw.prob_at.line : raw.header_line; }

void require(const RawGraphFile& raw, const Stanza& stanza, const char* name, bool wanted) {
    if (wanted && !stanza)
        throw ParseError(ParseErrorKind::InvariantViolation, where(raw), 0,
                         std::string("problem '") + std::string(tag(raw.problem)) + "' needs a '" + name + "' stanza");
    if (!wanted && stanza)
        throw ParseError(ParseErrorKind::InvariantViolation, stanza.line, 1,
                         std::string("problem '") + std::string(tag(raw.problem).empty() ? "bare" : tag(raw.problem)) +
                             "' takes no '" + name + "' stanza");
}

void write_set(std::ostringstream& out, const char* key, const std::vector<Vertex>& members) {
    out << key;
    for (Vertex v : members)
        out << ' ' << v + 1;
    out << '\n';
}

}  // namespace

AnyInstance parse_graph_file(std::string_view text) {
    RawGraphFile raw = read_raw(text);
    Graph g(raw.n, raw.edges);
    const bool weighted = raw.weight_count != 0;
    auto sorted = [](std::vector<Vertex> v) {
        std::sort(v.begin(), v.end());
        return v;
    };

    AnyInstance inst;
    std::size_t check_line = where(raw);
    switch (raw.problem) {
    case Problem::Bare:
    case Problem::ThreeColoring:
    case Problem::Clique:
    case Problem::IndependentSet:
    case Problem::VertexCover:
    case Problem::Fvs: {
        const bool budgeted = raw.problem != Problem::Bare && raw.problem != Problem::ThreeColoring;
        require(raw, raw.l_at, "l", budgeted);
        require(raw, raw.px_at, "px", false);
        require(raw, raw.py_at, "py", false);
        require(raw, raw.w_at, "w", false);
        BudgetedInstance b{raw.problem, std::move(g), std::nullopt, std::nullopt};
        if (budgeted)
            b.ell = raw.ell;
        if (raw.z_at)
            b.deletion_set = VertexSet(sorted(raw.z));
        inst = std::move(b);
        break;
    }
    case Problem::ThreeColTsd:
        require(raw, raw.px_at, "px", true);
        require(raw, raw.py_at, "py", true);
        require(raw, raw.l_at, "l", false);
        require(raw, raw.z_at, "z", false);
        require(raw, raw.w_at, "w", false);
        check_line = raw.py_at.line;
        inst = TsdInstance{std::move(g), VertexSet(raw.px), VertexSet(raw.py)};
        break;
    case Problem::FvsBg6:
    case Problem::FvsBipartite:
        require(raw, raw.px_at, "px", true);
        require(raw, raw.py_at, "py", true);
        require(raw, raw.l_at, "l", true);
        require(raw, raw.z_at, "z", false);
        require(raw, raw.w_at, "w", false);
        check_line = raw.py_at.line;
        inst = Bg6Instance{raw.problem, std::move(g), VertexSet(raw.px), VertexSet(raw.py), raw.ell};
        break;
    default: {
        require(raw, raw.z_at, "z", true);
        require(raw, raw.l_at, "l", true);
        require(raw, raw.px_at, "px", false);
        require(raw, raw.py_at, "py", false);
        require(raw, raw.w_at, "w", raw.problem == Problem::WfvsVc);
        check_line = raw.z_at.line;
        ParamInstance p;
        p.problem = raw.problem;
        p.graph = std::move(g);
        p.deletion_set = VertexSet(sorted(raw.z));
        p.ell = raw.ell;
        p.param_k = static_cast<std::int64_t>(raw.z.size());
        if (weighted)
            p.weights = raw.weights;
        inst = std::move(p);
        break;
    }
    }
    if (auto err = check_instance(inst))
        throw ParseError(ParseErrorKind::InvariantViolation, check_line, 0, *err);
    return inst;
}

std::string write_graph_file(const AnyInstance& inst) {
    const Graph& g = graph_of(inst);
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges())
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    auto sorted = [](const VertexSet& s) { return s.sorted().members(); };
    std::visit(
        [&](const auto& i) {
            using T = std::decay_t<decltype(i)>;
            if constexpr (std::is_same_v<T, BudgetedInstance>) {
                if (i.ell)
                    out << "l " << *i.ell << '\n';
                if (i.deletion_set)
                    write_set(out, "z", sorted(*i.deletion_set));
            } else if constexpr (std::is_same_v<T, TsdInstance>) {
                write_set(out, "px", i.x.members());
                write_set(out, "py", i.y.members());
            } else if constexpr (std::is_same_v<T, Bg6Instance>) {
                out << "l " << i.ell << '\n';
                write_set(out, "px", i.x.members());
                write_set(out, "py", i.y.members());
            } else {
                out << "l " << i.ell << '\n';
                write_set(out, "z", sorted(i.deletion_set));
                if (i.weights)
                    for (std::size_t v = 0; v < i.weights->size(); ++v)
                        out << "w " << v + 1 << ' ' << (*i.weights)[v] << '\n';
            }
        },
        inst);
    const Problem p = problem_of(inst);
    if (p != Problem::Bare)
        out << "prob " << tag(p) << '\n';
    return out.str();
}

CnfFormula parse_cnf(std::string_view text) {
    const auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(ParseErrorKind::Syntax, 1, 0, "missing 'p cnf' header");
    const Line& header = lines[0];
    if (header.tokens[0].text != "p" || header.tokens.size() < 2 || header.tokens[1].text != "cnf")
        fail(ParseErrorKind::Syntax, header, 0, "expected 'p cnf <vars> <clauses>' header");
    if (header.tokens.size() != 4)
        fail(ParseErrorKind::Syntax, header, std::min<std::size_t>(header.tokens.size(), 4),
             "header takes exactly two counts");
    const std::int64_t vars = to_int(header.tokens[2], header.number);
    const std::int64_t declared = to_int(header.tokens[3], header.number);
    if (vars < 0 || vars > 1'000'000)
        fail(ParseErrorKind::Syntax, header, 2, "variable count out of range");
    if (declared < 0)
        fail(ParseErrorKind::Syntax, header, 3, "negative clause count");

    CnfFormula f;
    f.variable_count = static_cast<int>(vars);
    Clause open;
    bool pending = false;
    std::size_t last_line = header.number;
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens[0].text == "%")
            break;
        if (line.tokens[0].text == "p")
            fail(ParseErrorKind::Syntax, line, 0, "second header line");
        last_line = line.number;
        for (std::size_t i = 0; i < line.tokens.size(); ++i) {
            std::int64_t lit = to_int(line.tokens[i], line.number);
            if (lit == 0) {
                f.clauses.push_back(std::move(open));
                open.clear();
                pending = false;
                continue;
            }
            if (lit < -vars || lit > vars)
                fail(ParseErrorKind::InvariantViolation, line, i,
                     "literal " + std::to_string(lit) + " names an undeclared variable");
            open.push_back(static_cast<int>(lit));
            pending = true;
        }
    }
    if (pending)
        throw ParseError(ParseErrorKind::Syntax, last_line, 0, "last clause is not terminated by 0");
    if (static_cast<std::int64_t>(f.clauses.size()) != declared)
        throw ParseError(ParseErrorKind::CountMismatch, header.number, header.tokens[3].column,
                         "header declares " + std::to_string(declared) + " clauses, body has " +
                             std::to_string(f.clauses.size()));
    return f;
}

std::string write_cnf(const CnfFormula& f) {
    const CnfFormula c = canonical_formula(f);
    std::ostringstream out;
    out << "p cnf " << c.variable_count << ' ' << c.clauses.size() << '\n';
    for (const auto& clause : c.clauses) {
        for (int lit : clause)
            out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

Manifest parse_manifest(std::string_view text, const std::filesystem::path& base) {
    const auto lines = tokenize(text);
    if (lines.empty())
        throw ParseError(ParseErrorKind::Syntax, 1, 0, "empty manifest");
    const Line& first = lines[0];
    if (first.tokens[0].text != "problem")
        fail(ParseErrorKind::Syntax, first, 0, "manifest must start with 'problem <tag>'");
    expect_args(first, 1);
    auto problem = problem_from_tag(first.tokens[1].text);
    if (!problem)
        fail(ParseErrorKind::UnknownTag, first, 1, "unknown problem tag '" + std::string(first.tokens[1].text) + "'");

    Manifest out;
    out.problem = *problem;
    std::vector<std::string> failures;
    std::optional<ParseErrorKind> first_kind;
    std::size_t first_line = 0;
    auto record = [&](ParseErrorKind kind, std::size_t line, std::string message) {
        if (!first_kind) {
            first_kind = kind;
            first_line = line;
        }
        failures.push_back(std::move(message));
    };
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const Line& line = lines[li];
        if (line.tokens[0].text != "instance")
            fail(ParseErrorKind::Syntax, line, 0, "expected 'instance <path>'");
        if (line.tokens.size() < 2)
            fail(ParseErrorKind::Syntax, line, 0, "'instance' needs a path");
        // The path runs to the end of the line, spaces included.
        const Token& start = line.tokens[1];
        const Token& stop = line.tokens.back();
        const std::string rel(start.text.data(), stop.text.data() + stop.text.size());
        const auto path = base / rel;
        std::error_code ec;
        if (!std::filesystem::is_regular_file(path, ec)) {
            record(ParseErrorKind::Unresolvable, line.number, rel + ": cannot resolve " + path.string());
            continue;
        }
        try {
            AnyInstance inst = parse_graph_file(read_file(path));
            const Problem got = problem_of(inst);
            const bool compatible =
                got == out.problem || (out.problem == Problem::FvsBipartite && got == Problem::FvsBg6);
            if (!compatible) {
                record(ParseErrorKind::InvariantViolation, line.number,
                       rel + ": problem '" + std::string(tag(got)) + "' differs from the manifest's '" +
                           std::string(tag(out.problem)) + "'");
                continue;
            }
            out.paths.push_back(path);
            out.instances.push_back(std::move(inst));
        } catch (const ParseError& e) {
            record(e.kind(), line.number, rel + ": " + e.what());
        }
    }
    if (!failures.empty()) {
        std::string joined;
        for (const auto& f : failures)
            joined += (joined.empty() ? "" : "; ") + f;
        throw ParseError(*first_kind, first_line, 0, joined);
    }
    if (out.instances.empty())
        throw ParseError(ParseErrorKind::Syntax, lines.back().number, 0, "manifest lists no instances");
    return out;
}

Manifest load_manifest(const std::filesystem::path& path) {
    return parse_manifest(read_file(path), path.parent_path());
}

std::string write_report(Construction c, const CompositionOutput& out) {
    const auto& r = out.report;
    std::ostringstream s;
    s << "construction " << tag(c) << '\n'
      << "target " << tag(out.instance.problem) << '\n'
      << "canonical_no " << (r.canonical_no ? 1 : 0) << '\n'
      << "t_input " << r.t_input << '\n'
      << "t " << r.t << '\n'
      << "log_t " << r.log_t << '\n'
      << "n " << r.n << '\n'
      << "m " << r.m << '\n'
      << "y " << r.y << '\n'
      << "ell " << r.ell << '\n'
      << "expected_ell_prime " << r.expected_ell_prime << '\n'
      << "expected_k_prime " << r.expected_k_prime << '\n'
      << "ell_prime " << out.instance.ell << '\n'
      << "k_prime " << out.instance.param_k << '\n'
      << "vertices " << out.instance.graph.vertex_count() << '\n'
      << "edges " << out.instance.graph.edge_count() << '\n';
    for (const auto& range : out.gadget_index)
        s << "range " << range.label << ' ' << range.first + 1 << ' ' << range.last + 1 << '\n';
    return s.str();
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw Error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view bytes) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw Error("cannot write " + path.string());
    out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
    if (!out)
        throw Error("write failed for " + path.string());
}

}  // namespace crosscomp

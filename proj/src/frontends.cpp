#include <bipolar_aba/error.hpp>
#include <bipolar_aba/frontends.hpp>

#include <nlohmann/json.hpp>

#include <cctype>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace baba {

std::optional<SupportInterpretation> parse_support(std::string_view text) noexcept
{
    if (text == "deductive")
        return SupportInterpretation::Deductive;
    if (text == "necessary")
        return SupportInterpretation::Necessary;
    return std::nullopt;
}

std::optional<std::size_t> GraphFramework::find(std::string_view name) const
{
    for (std::size_t i = 0; i < arguments.size(); ++i)
        if (arguments[i] == name)
            return i;
    return std::nullopt;
}

namespace {
    struct Position {
        std::size_t line = 1;
        std::size_t column = 1;
    };

    struct Statement {
        std::string keyword;
        std::vector<std::string> args;
        Position where;
    };

    class StatementReader {
    public:
        explicit StatementReader(std::string_view text) : text_(text) {}

        std::optional<Statement> next()
        {
            skip_blank();
            if (at_end())
                return std::nullopt;
            Statement st;
            st.where = pos_;
            st.keyword = name("statement keyword");
            skip_blank();
            expect('(');
            do {
                skip_blank();
                st.args.push_back(name("name"));
                skip_blank();
            } while (accept(','));
            expect(')');
            skip_blank();
            expect('.');
            return st;
        }

    private:
        [[nodiscard]] bool at_end() const noexcept { return offset_ >= text_.size(); }
        [[nodiscard]] char peek() const noexcept { return text_[offset_]; }

        void advance()
        {
            if (peek() == '\n') {
                ++pos_.line;
                pos_.column = 1;
            }
            else
                ++pos_.column;
            ++offset_;
        }

        void skip_blank()
        {
            while (!at_end()) {
                if (std::isspace(static_cast<unsigned char>(peek())))
                    advance();
                else if (peek() == '#')
                    while (!at_end() && peek() != '\n')
                        advance();
                else
                    break;
            }
        }

        [[noreturn]] void fail(const std::string & expected) const
        {
            std::string found = at_end() ? "end of input" : std::string("'") + peek() + "'";
            throw ParseError(ErrorCode::SyntaxError, pos_.line, pos_.column, "expected " + expected + ", found " + found);
        }

        static bool name_char(char c) noexcept { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

        std::string name(const std::string & what)
        {
            std::string out;
            while (!at_end() && name_char(peek())) {
                out.push_back(peek());
                advance();
            }
            if (out.empty())
                fail(what);
            return out;
        }

        bool accept(char c)
        {
            if (!at_end() && peek() == c) {
                advance();
                return true;
            }
            return false;
        }

        void expect(char c)
        {
            if (!accept(c))
                fail(std::string("'") + c + "'");
        }

        std::string_view text_;
        std::size_t offset_ = 0;
        Position pos_;
    };

    void require_arity(const Statement & st, std::size_t n)
    {
        if (st.args.size() != n)
            throw ParseError(ErrorCode::SyntaxError, st.where.line, st.where.column,
                "'" + st.keyword + "' takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") + ", got " + std::to_string(st.args.size()));
    }

    [[noreturn]] void unknown_statement(const Statement & st, const char * allowed)
    {
        throw ParseError(ErrorCode::SyntaxError, st.where.line, st.where.column, "unknown statement '" + st.keyword + "', expected one of " + allowed);
    }

    GraphFramework parse_graph(std::string_view text, bool allow_supports)
    {
        GraphFramework g;
        std::unordered_map<std::string, std::size_t> ids;
        std::set<std::pair<std::size_t, std::size_t>> attacks, supports;
        StatementReader reader(text);

        auto endpoint = [&](const Statement & st, const std::string & n) {
            auto it = ids.find(n);
            if (it == ids.end())
                throw ParseError(ErrorCode::UnknownArgument, st.where.line, st.where.column, "undeclared argument '" + n + "'");
            return it->second;
        };

        while (auto st = reader.next()) {
            if (st->keyword == "arg") {
                require_arity(*st, 1);
                if (ids.emplace(st->args[0], g.arguments.size()).second)
                    g.arguments.push_back(st->args[0]);
            }
            else if (st->keyword == "att" || (allow_supports && st->keyword == "sup")) {
                require_arity(*st, 2);
                std::pair edge{endpoint(*st, st->args[0]), endpoint(*st, st->args[1])};
                auto & seen = st->keyword == "att" ? attacks : supports;
                auto & list = st->keyword == "att" ? g.attacks : g.supports;
                if (seen.insert(edge).second)
                    list.push_back(edge);
            }
            else
                unknown_statement(*st, allow_supports ? "arg, att, sup" : "arg, att");
        }
        return g;
    }
}

Framework parse_aba(std::string_view text, const FrameworkOptions & options)
{
    FrameworkDecl decl;
    std::unordered_set<std::string> mentioned;
    std::vector<Position> asm_pos, ctr_pos, rule_pos;

    auto mention = [&](const std::string & n) {
        if (mentioned.insert(n).second)
            decl.language.push_back(n);
    };

    StatementReader reader(text);
    while (auto st = reader.next()) {
        if (st->keyword == "asm") {
            require_arity(*st, 1);
            decl.assumptions.push_back(st->args[0]);
            asm_pos.push_back(st->where);
        }
        else if (st->keyword == "ctr") {
            require_arity(*st, 2);
            decl.contraries.emplace_back(st->args[0], st->args[1]);
            ctr_pos.push_back(st->where);
        }
        else if (st->keyword == "rule") {
            require_arity(*st, 2);
            decl.rules.emplace_back(st->args[0], st->args[1]);
            rule_pos.push_back(st->where);
            continue;
        }
        else
            unknown_statement(*st, "asm, ctr, rule");
        for (const auto & a : st->args)
            mention(a);
    }

    // Rules may only use sentences declared by asm or ctr statements.
    for (std::size_t i = 0; i < decl.rules.size(); ++i)
        for (const auto * n : {&decl.rules[i].first, &decl.rules[i].second})
            if (!mentioned.contains(*n))
                throw ParseError(ErrorCode::UnknownName, rule_pos[i].line, rule_pos[i].column, "undeclared sentence '" + *n + "' in rule");

    try {
        return build_framework(decl, options);
    }
    catch (const FrameworkError & e) {
        Position where{0, 0};
        switch (e.kind()) {
        case DeclKind::Assumption: where = asm_pos.at(e.index()); break;
        case DeclKind::Contrary: where = ctr_pos.at(e.index()); break;
        case DeclKind::Rule: where = rule_pos.at(e.index()); break;
        default: break;
        }
        throw ParseError(e.code(), where.line, where.column, e.what());
    }
}

GraphFramework parse_af(std::string_view text)
{
    return parse_graph(text, false);
}

GraphFramework parse_baf(std::string_view text)
{
    return parse_graph(text, true);
}

std::string print_aba(const Framework & f)
{
    std::string out;
    for (std::size_t a = 0; a < f.num_assumptions(); ++a)
        out += "asm(" + f.assumption_name(static_cast<AssumptionId>(a)) + ").\n";
    for (std::size_t a = 0; a < f.num_assumptions(); ++a) {
        auto id = static_cast<AssumptionId>(a);
        out += "ctr(" + f.assumption_name(id) + "," + f.name(f.contrary(id)) + ").\n";
    }
    for (const auto & r : f.rules())
        out += "rule(" + f.name(r.head) + "," + f.name(r.body) + ").\n";
    return out;
}

Framework map_to_bipolar_aba(const GraphFramework & g, const FrameworkOptions & options)
{
    if (!g.supports.empty() && g.interpretation == SupportInterpretation::None)
        throw Error(ErrorCode::MissingInterpretation, "supports need a deductive or necessary interpretation");

    std::unordered_set<std::string> taken(g.arguments.begin(), g.arguments.end());
    FrameworkDecl decl;
    decl.language = g.arguments;
    decl.assumptions = g.arguments;
    std::vector<std::string> contrary;
    contrary.reserve(g.arguments.size());
    for (const auto & a : g.arguments) {
        std::string c = "c_" + a;
        while (!taken.insert(c).second)
            c.insert(0, "_");
        contrary.push_back(c);
        decl.language.push_back(c);
        decl.contraries.emplace_back(a, c);
    }
    for (auto [from, to] : g.attacks)
        decl.rules.emplace_back(contrary.at(to), g.arguments.at(from));
    for (auto [from, to] : g.supports) {
        if (g.interpretation == SupportInterpretation::Deductive)
            decl.rules.emplace_back(g.arguments.at(to), g.arguments.at(from));
        else
            decl.rules.emplace_back(g.arguments.at(from), g.arguments.at(to));
    }
    return build_framework(decl, options);
}

std::string write_extensions(const Framework & f, const ExtensionCollection & e, OutputFormat format)
{
    ExtensionCollection sorted = e;
    if (!sorted.canonical())
        sorted.canonicalize(f);

    if (format == OutputFormat::Json) {
        auto arr = nlohmann::json::array();
        for (const auto & s : sorted)
            arr.push_back(f.names_of(s));
        return arr.dump() + "\n";
    }

    if (sorted.empty())
        return "NO EXTENSIONS\n";
    std::string out;
    for (const auto & s : sorted) {
        out += '{';
        bool first = true;
        for (const auto & n : f.names_of(s)) {
            if (!first)
                out += ',';
            out += n;
            first = false;
        }
        out += "}\n";
    }
    return out;
}

} // namespace baba

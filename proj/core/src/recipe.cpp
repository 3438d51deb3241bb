#include "minorbench/recipe.hpp"

#include <cctype>

namespace minorbench {

namespace {

struct Token {
    enum class Kind { Word, Number, Op, Semicolon, End } kind;
    std::string text;
    std::size_t position;
};

std::vector<Token> tokenize(std::string_view text)
{
    std::vector<Token> tokens;
    std::size_t i = 0;
    while (i < text.size()) {
        const char c = text[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
        } else if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isalnum(static_cast<unsigned char>(text[i])))
                ++i;
            tokens.push_back({Token::Kind::Word, std::string(text.substr(start, i - start)), start});
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
                ++i;
            tokens.push_back({Token::Kind::Number, std::string(text.substr(start, i - start)), start});
        } else if (c == ';') {
            tokens.push_back({Token::Kind::Semicolon, ";", i++});
        } else if (c == '<' || c == '>' || c == '=') {
            std::size_t start = i++;
            if (i < text.size() && text[i] == '=')
                ++i;
            std::string op(text.substr(start, i - start));
            if (op == "=")
                throw RecipeError("lexical error: '=' must be written '=='", start);
            tokens.push_back({Token::Kind::Op, op, start});
        } else {
            throw RecipeError(std::string("lexical error: unexpected character '") + c + "'", i);
        }
    }
    tokens.push_back({Token::Kind::End, "", text.size()});
    return tokens;
}

class Parser {
public:
    explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

    Recipe parse()
    {
        Recipe recipe;
        recipe.statements.push_back(statement());
        while (peek().kind == Token::Kind::Semicolon) {
            advance();
            if (peek().kind == Token::Kind::End)
                break;
            recipe.statements.push_back(statement());
        }
        if (peek().kind != Token::Kind::End)
            throw RecipeError("expected ';' but found '" + peek().text + "'", peek().position);
        return recipe;
    }

private:
    const Token& peek() const { return tokens_[index_]; }
    const Token& advance() { return tokens_[index_++]; }

    void expect_word(std::string_view word)
    {
        const Token& t = advance();
        if (t.kind != Token::Kind::Word || t.text != word)
            throw RecipeError("expected '" + std::string(word) + "' but found '" + t.text + "'", t.position);
    }

    RecipeStatement statement()
    {
        const Token& head = advance();
        if (head.kind == Token::Kind::Word && head.text == "base") {
            expect_word("halfgrid");
            return BaseHalfGrid{};
        }
        if (head.kind == Token::Kind::Word && head.text == "attach") {
            AttachStatement stmt;
            const Token& pat = advance();
            if (pat.kind == Token::Kind::Word && pat.text == "K5")
                stmt.pattern = AttachPattern::K5;
            else if (pat.kind == Token::Kind::Word && pat.text == "K33")
                stmt.pattern = AttachPattern::K33;
            else
                throw RecipeError("unknown pattern '" + pat.text + "' (expected K5 or K33)", pat.position);
            expect_word("where");
            expect_word("col");
            const Token& op = advance();
            if (op.kind != Token::Kind::Op)
                throw RecipeError("expected a comparison but found '" + op.text + "'", op.position);
            if (op.text == "<")
                stmt.comparison = ColumnComparison::Less;
            else if (op.text == "<=")
                stmt.comparison = ColumnComparison::LessEqual;
            else if (op.text == ">")
                stmt.comparison = ColumnComparison::Greater;
            else if (op.text == ">=")
                stmt.comparison = ColumnComparison::GreaterEqual;
            else
                stmt.comparison = ColumnComparison::Equal;
            const Token& zero = advance();
            if (zero.kind != Token::Kind::Number || zero.text != "0")
                throw RecipeError("column predicates compare against 0, found '" + zero.text + "'", zero.position);
            return stmt;
        }
        throw RecipeError("expected 'base' or 'attach' but found '" + head.text + "'", head.position);
    }

    std::vector<Token> tokens_;
    std::size_t index_ = 0;
};

const char* comparison_text(ColumnComparison cmp)
{
    switch (cmp) {
    case ColumnComparison::Less: return "<";
    case ColumnComparison::LessEqual: return "<=";
    case ColumnComparison::Greater: return ">";
    case ColumnComparison::GreaterEqual: return ">=";
    case ColumnComparison::Equal: return "==";
    }
    return "?";
}

}  // namespace

bool column_matches(ColumnComparison cmp, int col)
{
    switch (cmp) {
    case ColumnComparison::Less: return col < 0;
    case ColumnComparison::LessEqual: return col <= 0;
    case ColumnComparison::Greater: return col > 0;
    case ColumnComparison::GreaterEqual: return col >= 0;
    case ColumnComparison::Equal: return col == 0;
    }
    return false;
}

Recipe parse_recipe(std::string_view text)
{
    auto tokens = tokenize(text);
    Recipe recipe = Parser(tokens).parse();
    std::size_t bases = 0;
    for (const auto& stmt : recipe.statements)
        bases += std::holds_alternative<BaseHalfGrid>(stmt);
    if (bases == 0)
        throw RecipeError("recipe has no 'base halfgrid' statement", 0);
    if (bases > 1)
        throw RecipeError("recipe has more than one base statement", 0);
    if (!std::holds_alternative<BaseHalfGrid>(recipe.statements.front()))
        throw RecipeError("the base statement must come first", 0);
    return recipe;
}

std::string to_string(const Recipe& recipe)
{
    std::string out;
    for (const auto& stmt : recipe.statements) {
        if (!out.empty())
            out += ' ';
        if (std::holds_alternative<BaseHalfGrid>(stmt)) {
            out += "base halfgrid;";
        } else {
            const auto& a = std::get<AttachStatement>(stmt);
            out += "attach ";
            out += a.pattern == AttachPattern::K5 ? "K5" : "K33";
            out += " where col ";
            out += comparison_text(a.comparison);
            out += " 0;";
        }
    }
    return out;
}

Graph eval_recipe(const Recipe& recipe, TruncationParams p)
{
    p.validate();
    Graph g;
    for (const auto& stmt : recipe.statements) {
        if (std::holds_alternative<BaseHalfGrid>(stmt)) {
            g = half_grid(p);
            continue;
        }
        const auto& a = std::get<AttachStatement>(stmt);
        for (int col = -p.m; col <= p.m; ++col) {
            if (!column_matches(a.comparison, col))
                continue;
            const VertexId v = grid_vertex_id(p, col, 0);
            g = a.pattern == AttachPattern::K5 ? attach_k5(g, v) : attach_k33(g, v);
        }
    }
    return g;
}

Recipe canonical_g_recipe()
{
    return Recipe{{BaseHalfGrid{},
                   AttachStatement{AttachPattern::K5, ColumnComparison::Less},
                   AttachStatement{AttachPattern::K33, ColumnComparison::GreaterEqual}}};
}

}  // namespace minorbench

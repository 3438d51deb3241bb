#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "minorbench/constructions.hpp"

namespace minorbench {

// Construction recipes, e.g.
//
//   base halfgrid; attach K5 where col < 0; attach K33 where col >= 0;
//
//   recipe  := stmt (";" stmt)* ";"?
//   stmt    := "base" "halfgrid" | "attach" pattern "where" "col" cmp "0"
//   pattern := "K5" | "K33"
//   cmp     := "<" | "<=" | ">" | ">=" | "=="

enum class AttachPattern { K5, K33 };
enum class ColumnComparison { Less, LessEqual, Greater, GreaterEqual, Equal };

struct BaseHalfGrid {
    bool operator==(const BaseHalfGrid&) const = default;
};

struct AttachStatement {
    AttachPattern pattern = AttachPattern::K5;
    ColumnComparison comparison = ColumnComparison::Less;
    bool operator==(const AttachStatement&) const = default;
};

using RecipeStatement = std::variant<BaseHalfGrid, AttachStatement>;

struct Recipe {
    std::vector<RecipeStatement> statements;
    bool operator==(const Recipe&) const = default;
};

class RecipeError : public std::runtime_error {
public:
    RecipeError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " at offset " + std::to_string(position)), position_(position)
    {
    }
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

Recipe parse_recipe(std::string_view text);

/// Canonical text: statements separated by "; ", single spaces, trailing ";".
std::string to_string(const Recipe& recipe);

/// Runs the statements in order. Each attach applies to the row-0 grid vertices whose
/// column satisfies the predicate, in ascending column order.
Graph eval_recipe(const Recipe& recipe, TruncationParams p);

/// The recipe whose evaluation is build_G.
Recipe canonical_g_recipe();

bool column_matches(ColumnComparison cmp, int col);

}  // namespace minorbench

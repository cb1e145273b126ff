#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wlnovelty {

// Parse or validation failure with a 1-based source position.
class ParseError : public std::runtime_error {
  public:
    ParseError(const std::string& message, int line, int column);

    int line() const { return line_; }
    int column() const { return column_; }

  private:
    int line_;
    int column_;
};

struct TypeDecl {
    std::string name;
    std::string parent;  // "object" for roots

    bool operator==(const TypeDecl&) const = default;
};

struct PredicateDecl {
    std::string name;
    std::vector<std::string> param_types;  // one entry per argument

    int arity() const { return static_cast<int>(param_types.size()); }
    bool operator==(const PredicateDecl&) const = default;
};

struct TypedName {
    std::string name;
    std::string type;

    bool operator==(const TypedName&) const = default;
};

// Atom over schema parameters. Argument encoding: i >= 0 is the i-th
// parameter, i < 0 refers to domain constant -(i + 1).
struct SchemaAtom {
    int predicate = -1;
    std::vector<int> args;

    bool operator==(const SchemaAtom&) const = default;
};

struct ActionSchema {
    std::string name;
    std::vector<TypedName> params;
    std::vector<SchemaAtom> precondition;
    std::vector<SchemaAtom> add_effects;
    std::vector<SchemaAtom> del_effects;

    bool operator==(const ActionSchema&) const = default;
};

struct Domain {
    std::string name;
    bool typed = false;
    std::vector<TypeDecl> types;  // excludes the implicit root "object"
    std::vector<PredicateDecl> predicates;
    std::vector<TypedName> constants;
    std::vector<ActionSchema> schemata;

    std::optional<int> predicate_id(std::string_view predicate_name) const;
    std::optional<int> constant_id(std::string_view constant_name) const;
    bool type_exists(std::string_view type_name) const;

    // True iff an object of type `sub` may fill a parameter of type `super`.
    bool is_subtype(std::string_view sub, std::string_view super) const;

    bool operator==(const Domain&) const = default;
};

// Ground atom over problem objects; args index into LiftedProblem::objects.
struct GroundAtomRef {
    int predicate = -1;
    std::vector<int> args;

    bool operator==(const GroundAtomRef&) const = default;
    bool operator<(const GroundAtomRef& other) const {
        if (predicate != other.predicate) return predicate < other.predicate;
        return args < other.args;
    }
};

struct LiftedProblem {
    std::string name;
    std::shared_ptr<const Domain> domain;
    std::vector<TypedName> objects;  // domain constants first, then problem objects
    std::vector<GroundAtomRef> init;  // duplicate-free, source order
    std::vector<GroundAtomRef> goal;  // duplicate-free, source order

    std::optional<int> object_id(std::string_view object_name) const;
};

std::shared_ptr<const Domain> parse_domain(std::string_view text);
LiftedProblem parse_problem(std::string_view text, std::shared_ptr<const Domain> domain);

std::shared_ptr<const Domain> load_domain(const std::string& path);
LiftedProblem load_problem(const std::string& path, std::shared_ptr<const Domain> domain);

std::string to_pddl(const Domain& domain);
std::string to_pddl(const LiftedProblem& problem);

}  // namespace wlnovelty

#include "wlnovelty/pddl.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace wlnovelty {

ParseError::ParseError(const std::string& message, int line, int column)
    : std::runtime_error(message + " (line " + std::to_string(line) + ", column " +
                         std::to_string(column) + ")"),
      line_(line),
      column_(column) {}

std::optional<int> Domain::predicate_id(std::string_view predicate_name) const {
    for (std::size_t i = 0; i < predicates.size(); ++i) {
        if (predicates[i].name == predicate_name) return static_cast<int>(i);
    }
    return std::nullopt;
}

std::optional<int> Domain::constant_id(std::string_view constant_name) const {
    for (std::size_t i = 0; i < constants.size(); ++i) {
        if (constants[i].name == constant_name) return static_cast<int>(i);
    }
    return std::nullopt;
}

bool Domain::type_exists(std::string_view type_name) const {
    if (type_name == "object") return true;
    for (const TypeDecl& t : types) {
        if (t.name == type_name) return true;
    }
    return false;
}

bool Domain::is_subtype(std::string_view sub, std::string_view super) const {
    if (super == "object") return true;
    std::string current(sub);
    while (current != "object") {
        if (current == super) return true;
        bool found = false;
        for (const TypeDecl& t : types) {
            if (t.name == current) {
                current = t.parent;
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return false;
}

std::optional<int> LiftedProblem::object_id(std::string_view object_name) const {
    for (std::size_t i = 0; i < objects.size(); ++i) {
        if (objects[i].name == object_name) return static_cast<int>(i);
    }
    return std::nullopt;
}

namespace {

struct Token {
    enum Kind { LParen, RParen, Symbol, End };

    Kind kind = End;
    std::string text;
    int line = 1;
    int column = 1;
};

class Lexer {
  public:
    explicit Lexer(std::string_view text) : text_(text) {}

    Token next() {
        skip_layout();
        Token tok;
        tok.line = line_;
        tok.column = column_;
        if (pos_ >= text_.size()) {
            tok.kind = Token::End;
            return tok;
        }
        char c = text_[pos_];
        if (c == '(') {
            advance();
            tok.kind = Token::LParen;
            tok.text = "(";
            return tok;
        }
        if (c == ')') {
            advance();
            tok.kind = Token::RParen;
            tok.text = ")";
            return tok;
        }
        tok.kind = Token::Symbol;
        while (pos_ < text_.size() && !is_delimiter(text_[pos_])) {
            tok.text.push_back(
                static_cast<char>(std::tolower(static_cast<unsigned char>(text_[pos_]))));
            advance();
        }
        return tok;
    }

  private:
    static bool is_delimiter(char c) {
        return c == '(' || c == ')' || c == ';' ||
               std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    void skip_layout() {
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (std::isspace(static_cast<unsigned char>(c)) != 0) {
                advance();
            } else if (c == ';') {
                while (pos_ < text_.size() && text_[pos_] != '\n') advance();
            } else {
                break;
            }
        }
    }

    void advance() {
        if (text_[pos_] == '\n') {
            ++line_;
            column_ = 1;
        } else {
            ++column_;
        }
        ++pos_;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int column_ = 1;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : lexer_(text) { current_ = lexer_.next(); }

    std::shared_ptr<const Domain> parse_domain_file() {
        auto domain = std::make_shared<Domain>();
        expect(Token::LParen);
        expect_symbol("define");
        expect(Token::LParen);
        expect_symbol("domain");
        domain->name = expect_name("domain name");
        expect(Token::RParen);
        while (current_.kind == Token::LParen) {
            Token open = current_;
            advance_token();
            std::string section = expect_name("section keyword");
            if (section == ":requirements") {
                parse_requirements(*domain);
            } else if (section == ":types") {
                parse_types(*domain, open);
            } else if (section == ":constants") {
                parse_typed_names(domain->constants, *domain, "constant");
                expect(Token::RParen);
            } else if (section == ":predicates") {
                parse_predicates(*domain);
            } else if (section == ":action") {
                parse_action(*domain);
            } else {
                fail("unsupported section '" + section + "'", open);
            }
        }
        expect(Token::RParen);
        expect(Token::End);
        if (!domain->types.empty()) domain->typed = true;
        check_type_hierarchy(*domain);
        return domain;
    }

    LiftedProblem parse_problem_file(std::shared_ptr<const Domain> domain) {
        LiftedProblem problem;
        problem.domain = std::move(domain);
        problem.objects = problem.domain->constants;
        expect(Token::LParen);
        expect_symbol("define");
        expect(Token::LParen);
        expect_symbol("problem");
        problem.name = expect_name("problem name");
        expect(Token::RParen);
        bool saw_goal = false;
        while (current_.kind == Token::LParen) {
            Token open = current_;
            advance_token();
            std::string section = expect_name("section keyword");
            if (section == ":domain") {
                Token name_tok = current_;
                std::string referenced = expect_name("domain name");
                if (referenced != problem.domain->name) {
                    fail("problem references domain '" + referenced + "' but domain '" +
                             problem.domain->name + "' was given",
                         name_tok);
                }
                expect(Token::RParen);
            } else if (section == ":requirements") {
                parse_requirements_list();
            } else if (section == ":objects") {
                std::vector<TypedName> declared;
                parse_typed_names(declared, *problem.domain, "object");
                expect(Token::RParen);
                for (TypedName& obj : declared) {
                    if (find_object(problem, obj.name)) {
                        fail("duplicate object '" + obj.name + "'", open);
                    }
                    problem.objects.push_back(std::move(obj));
                }
            } else if (section == ":init") {
                while (current_.kind == Token::LParen) {
                    GroundAtomRef atom = parse_ground_atom(problem);
                    if (std::find(problem.init.begin(), problem.init.end(), atom) ==
                        problem.init.end()) {
                        problem.init.push_back(std::move(atom));
                    }
                }
                expect(Token::RParen);
            } else if (section == ":goal") {
                saw_goal = true;
                parse_goal(problem, open);
            } else {
                fail("unsupported section '" + section + "'", open);
            }
        }
        expect(Token::RParen);
        expect(Token::End);
        if (!saw_goal || problem.goal.empty()) {
            fail("problem has an empty goal", current_);
        }
        return problem;
    }

  private:
    void advance_token() { current_ = lexer_.next(); }

    [[noreturn]] void fail(const std::string& message, const Token& at) {
        throw ParseError(message, at.line, at.column);
    }

    void expect(Token::Kind kind) {
        if (current_.kind != kind) {
            std::string wanted = kind == Token::LParen ? "'('"
                                 : kind == Token::RParen ? "')'"
                                                         : "end of input";
            fail("expected " + wanted + " but found '" +
                     (current_.kind == Token::End ? std::string("end of input") : current_.text) +
                     "'",
                 current_);
        }
        if (kind != Token::End) advance_token();
    }

    void expect_symbol(const std::string& text) {
        if (current_.kind != Token::Symbol || current_.text != text) {
            fail("expected '" + text + "'", current_);
        }
        advance_token();
    }

    std::string expect_name(const std::string& what) {
        if (current_.kind != Token::Symbol) {
            fail("expected " + what, current_);
        }
        std::string name = current_.text;
        advance_token();
        return name;
    }

    void parse_requirements(Domain& domain) {
        while (current_.kind == Token::Symbol) {
            Token tok = current_;
            std::string req = tok.text;
            advance_token();
            if (req == ":strips") {
                // implied baseline
            } else if (req == ":typing") {
                domain.typed = true;
            } else {
                fail("unsupported requirement '" + req + "'", tok);
            }
        }
        expect(Token::RParen);
    }

    void parse_requirements_list() {
        // Problems may repeat the domain requirements; same subset applies.
        while (current_.kind == Token::Symbol) {
            Token tok = current_;
            std::string req = tok.text;
            advance_token();
            if (req != ":strips" && req != ":typing") {
                fail("unsupported requirement '" + req + "'", tok);
            }
        }
        expect(Token::RParen);
    }

    void parse_types(Domain& domain, const Token& open) {
        std::vector<std::string> pending;
        while (current_.kind == Token::Symbol) {
            Token tok = current_;
            std::string name = tok.text;
            advance_token();
            if (name == "-") {
                std::string parent = expect_name("type name");
                if (pending.empty()) fail("dangling '-' in type list", tok);
                for (const std::string& child : pending) {
                    domain.types.push_back({child, parent});
                }
                pending.clear();
            } else {
                pending.push_back(name);
            }
        }
        for (const std::string& child : pending) {
            domain.types.push_back({child, "object"});
        }
        expect(Token::RParen);
        std::unordered_set<std::string> seen;
        for (const TypeDecl& t : domain.types) {
            if (t.name == "object") fail("type 'object' must not be redeclared", open);
            if (!seen.insert(t.name).second) fail("duplicate type '" + t.name + "'", open);
        }
    }

    void check_type_hierarchy(const Domain& domain) {
        for (const TypeDecl& t : domain.types) {
            if (t.parent != "object" && !domain.type_exists(t.parent)) {
                fail("undeclared type '" + t.parent + "'", current_);
            }
        }
        // Reject cycles: every chain must reach the root.
        for (const TypeDecl& t : domain.types) {
            std::string current = t.name;
            std::size_t steps = 0;
            while (current != "object") {
                if (++steps > domain.types.size() + 1) {
                    fail("cyclic type hierarchy at '" + t.name + "'", current_);
                }
                for (const TypeDecl& u : domain.types) {
                    if (u.name == current) {
                        current = u.parent;
                        break;
                    }
                }
            }
        }
    }

    // Parses "name... [- type] name... [- type] ..." up to (but not
    // consuming) the closing paren.
    void parse_typed_names(std::vector<TypedName>& out, const Domain& domain,
                           const std::string& what) {
        std::vector<std::string> pending;
        std::vector<Token> pending_tokens;
        while (current_.kind == Token::Symbol) {
            Token tok = current_;
            std::string name = tok.text;
            advance_token();
            if (name == "-") {
                Token type_tok = current_;
                std::string type = expect_name("type name");
                if (!domain.type_exists(type)) {
                    fail("undeclared type '" + type + "'", type_tok);
                }
                if (pending.empty()) fail("dangling '-' in " + what + " list", tok);
                for (std::string& n : pending) {
                    out.push_back({std::move(n), type});
                }
                pending.clear();
                pending_tokens.clear();
            } else {
                pending.push_back(std::move(name));
                pending_tokens.push_back(tok);
            }
        }
        for (std::string& n : pending) {
            out.push_back({std::move(n), "object"});
        }
        std::unordered_set<std::string> seen;
        for (const TypedName& n : out) {
            if (!seen.insert(n.name).second) {
                fail("duplicate " + what + " '" + n.name + "'", current_);
            }
        }
    }

    void parse_predicates(Domain& domain) {
        while (current_.kind == Token::LParen) {
            Token open = current_;
            advance_token();
            PredicateDecl decl;
            decl.name = expect_name("predicate name");
            if (decl.name[0] == ':' || decl.name[0] == '?' || decl.name == "and" ||
                decl.name == "not") {
                fail("invalid predicate name '" + decl.name + "'", open);
            }
            std::vector<std::string> pending;
            while (current_.kind == Token::Symbol) {
                Token tok = current_;
                std::string sym = tok.text;
                advance_token();
                if (sym == "-") {
                    Token type_tok = current_;
                    std::string type = expect_name("type name");
                    if (!domain.type_exists(type)) {
                        fail("undeclared type '" + type + "'", type_tok);
                    }
                    if (pending.empty()) fail("dangling '-' in parameter list", tok);
                    for (std::size_t i = 0; i < pending.size(); ++i) {
                        decl.param_types.push_back(type);
                    }
                    pending.clear();
                } else {
                    if (sym[0] != '?') {
                        fail("expected variable in predicate declaration", tok);
                    }
                    pending.push_back(sym);
                }
            }
            for (std::size_t i = 0; i < pending.size(); ++i) {
                decl.param_types.push_back("object");
            }
            expect(Token::RParen);
            if (domain.predicate_id(decl.name)) {
                fail("duplicate predicate '" + decl.name + "'", open);
            }
            domain.predicates.push_back(std::move(decl));
        }
        expect(Token::RParen);
    }

    SchemaAtom parse_schema_atom(const Domain& domain, const ActionSchema& schema) {
        Token open = current_;
        expect(Token::LParen);
        Token name_tok = current_;
        std::string name = expect_name("predicate name");
        reject_construct(domain, name, name_tok);
        return finish_atom(domain, schema, name, open, name_tok);
    }

    // A declared predicate shadows these keywords (e.g. a predicate named
    // "exists" is a plain atom); otherwise the construct is named in the
    // error instead of a generic "undeclared predicate".
    void reject_construct(const Domain& domain, const std::string& head, const Token& at) {
        if (domain.predicate_id(head)) return;
        static const std::unordered_map<std::string, std::string> rejected = {
            {"not", "negative conditions"}, {"or", "disjunctive conditions"},
            {"imply", "disjunctive conditions"}, {"exists", "quantified conditions"},
            {"forall", "quantified conditions"}, {"when", "conditional effects"},
            {"=", "equality conditions"}, {"increase", "action costs"},
            {"decrease", "numeric effects"}, {"assign", "numeric effects"},
        };
        auto it = rejected.find(head);
        if (it != rejected.end()) {
            fail(it->second + " are not supported ('" + head + "')", at);
        }
    }

    void parse_action(Domain& domain) {
        ActionSchema schema;
        Token name_tok = current_;
        schema.name = expect_name("action name");
        for (const ActionSchema& existing : domain.schemata) {
            if (existing.name == schema.name) {
                fail("duplicate action '" + schema.name + "'", name_tok);
            }
        }
        expect_symbol(":parameters");
        expect(Token::LParen);
        std::vector<TypedName> params;
        parse_typed_names(params, domain, "parameter");
        expect(Token::RParen);
        for (const TypedName& p : params) {
            if (p.name[0] != '?') {
                fail("parameter '" + p.name + "' must start with '?'", name_tok);
            }
        }
        schema.params = std::move(params);
        bool saw_effect = false;
        while (current_.kind == Token::Symbol) {
            Token key_tok = current_;
            std::string key = expect_name("action keyword");
            if (key == ":precondition") {
                parse_condition(domain, schema, schema.precondition);
            } else if (key == ":effect") {
                saw_effect = true;
                parse_effect(domain, schema);
            } else {
                fail("unsupported action keyword '" + key + "'", key_tok);
            }
        }
        expect(Token::RParen);
        if (!saw_effect) fail("action '" + schema.name + "' has no effect", name_tok);
        domain.schemata.push_back(std::move(schema));
    }

    // Condition = atom | (and atom*). Pushes parsed atoms, duplicate-free.
    void parse_condition(const Domain& domain, const ActionSchema& schema,
                         std::vector<SchemaAtom>& out) {
        Token open = current_;
        expect(Token::LParen);
        if (current_.kind == Token::Symbol && current_.text == "and") {
            advance_token();
            while (current_.kind == Token::LParen) {
                push_unique(out, parse_schema_atom(domain, schema));
            }
            expect(Token::RParen);
            return;
        }
        if (current_.kind == Token::RParen) {  // "()" — empty condition
            advance_token();
            return;
        }
        // Bare atom: re-enter generic atom parsing with the '(' consumed.
        Token head = current_;
        std::string name = expect_name("predicate name");
        reject_construct(domain, name, head);
        push_unique(out, finish_atom(domain, schema, name, open, head));
    }

    // Shared tail of atom parsing once the head symbol has been read.
    SchemaAtom finish_atom(const Domain& domain, const ActionSchema& schema,
                           const std::string& name, const Token& open, const Token& name_tok) {
        auto pred = domain.predicate_id(name);
        if (!pred) fail("undeclared predicate '" + name + "'", name_tok);
        SchemaAtom atom;
        atom.predicate = *pred;
        const PredicateDecl& decl = domain.predicates[*pred];
        while (current_.kind == Token::Symbol) {
            Token term_tok = current_;
            std::string term = expect_name("term");
            int arg_index = static_cast<int>(atom.args.size());
            if (arg_index >= decl.arity()) {
                fail("predicate '" + name + "' takes " + std::to_string(decl.arity()) +
                         " arguments",
                     open);
            }
            const std::string& wanted = decl.param_types[arg_index];
            if (term[0] == '?') {
                int param = -1;
                for (std::size_t i = 0; i < schema.params.size(); ++i) {
                    if (schema.params[i].name == term) param = static_cast<int>(i);
                }
                if (param < 0) fail("undeclared variable '" + term + "'", term_tok);
                if (!domain.is_subtype(schema.params[param].type, wanted)) {
                    fail("variable '" + term + "' has type '" + schema.params[param].type +
                             "' but '" + wanted + "' is required",
                         term_tok);
                }
                atom.args.push_back(param);
            } else {
                auto constant = domain.constant_id(term);
                if (!constant) fail("undeclared constant '" + term + "'", term_tok);
                if (!domain.is_subtype(domain.constants[*constant].type, wanted)) {
                    fail("constant '" + term + "' has type '" +
                             domain.constants[*constant].type + "' but '" + wanted +
                             "' is required",
                         term_tok);
                }
                atom.args.push_back(-(*constant + 1));
            }
        }
        if (static_cast<int>(atom.args.size()) != decl.arity()) {
            fail("predicate '" + name + "' takes " + std::to_string(decl.arity()) +
                     " arguments but got " + std::to_string(atom.args.size()),
                 open);
        }
        expect(Token::RParen);
        return atom;
    }

    void parse_effect(const Domain& domain, ActionSchema& schema) {
        Token open = current_;
        expect(Token::LParen);
        if (current_.kind == Token::Symbol && current_.text == "and") {
            advance_token();
            while (current_.kind == Token::LParen) {
                parse_single_effect(domain, schema);
            }
            expect(Token::RParen);
            return;
        }
        parse_effect_body(domain, schema, open);
    }

    void parse_single_effect(const Domain& domain, ActionSchema& schema) {
        Token open = current_;
        expect(Token::LParen);
        parse_effect_body(domain, schema, open);
    }

    // '(' already consumed; parses "not (atom)" or a bare add atom.
    void parse_effect_body(const Domain& domain, ActionSchema& schema, const Token& open) {
        Token head = current_;
        std::string name = expect_name("effect");
        if (name == "not") {
            push_unique(schema.del_effects, parse_schema_atom(domain, schema));
            expect(Token::RParen);
            return;
        }
        reject_construct(domain, name, head);
        push_unique(schema.add_effects, finish_atom(domain, schema, name, open, head));
    }

    void push_unique(std::vector<SchemaAtom>& out, SchemaAtom atom) {
        if (std::find(out.begin(), out.end(), atom) == out.end()) {
            out.push_back(std::move(atom));
        }
    }

    GroundAtomRef finish_ground_atom(const LiftedProblem& problem, const std::string& name,
                                     const Token& open, const Token& name_tok) {
        const Domain& domain = *problem.domain;
        auto pred = domain.predicate_id(name);
        if (!pred) fail("undeclared predicate '" + name + "'", name_tok);
        GroundAtomRef atom;
        atom.predicate = *pred;
        const PredicateDecl& decl = domain.predicates[*pred];
        while (current_.kind == Token::Symbol) {
            Token term_tok = current_;
            std::string term = expect_name("object name");
            if (term[0] == '?') {
                fail("variable '" + term + "' not allowed here", term_tok);
            }
            int arg_index = static_cast<int>(atom.args.size());
            if (arg_index >= decl.arity()) {
                fail("predicate '" + name + "' takes " + std::to_string(decl.arity()) +
                         " arguments",
                     open);
            }
            auto obj = problem.object_id(term);
            if (!obj) fail("undeclared object '" + term + "'", term_tok);
            if (!domain.is_subtype(problem.objects[*obj].type, decl.param_types[arg_index])) {
                fail("object '" + term + "' has type '" + problem.objects[*obj].type +
                         "' but '" + decl.param_types[arg_index] + "' is required",
                     term_tok);
            }
            atom.args.push_back(*obj);
        }
        if (static_cast<int>(atom.args.size()) != decl.arity()) {
            fail("predicate '" + name + "' takes " + std::to_string(decl.arity()) +
                     " arguments but got " + std::to_string(atom.args.size()),
                 open);
        }
        expect(Token::RParen);
        return atom;
    }

    GroundAtomRef parse_ground_atom(const LiftedProblem& problem) {
        Token open = current_;
        expect(Token::LParen);
        Token name_tok = current_;
        std::string name = expect_name("predicate name");
        reject_construct(*problem.domain, name, name_tok);
        return finish_ground_atom(problem, name, open, name_tok);
    }

    void parse_goal(LiftedProblem& problem, const Token& open) {
        expect(Token::LParen);
        if (current_.kind == Token::Symbol && current_.text == "and") {
            advance_token();
            while (current_.kind == Token::LParen) {
                GroundAtomRef atom = parse_ground_atom(problem);
                if (std::find(problem.goal.begin(), problem.goal.end(), atom) ==
                    problem.goal.end()) {
                    problem.goal.push_back(std::move(atom));
                }
            }
            expect(Token::RParen);
        } else {
            Token head = current_;
            std::string name = expect_name("predicate name");
            reject_construct(*problem.domain, name, head);
            problem.goal.push_back(finish_ground_atom(problem, name, open, head));
        }
        expect(Token::RParen);
    }

    bool find_object(const LiftedProblem& problem, const std::string& name) {
        return problem.object_id(name).has_value();
    }

    Lexer lexer_;
    Token current_;
};

void print_typed_names(std::ostream& os, const std::vector<TypedName>& names, bool typed) {
    bool first = true;
    for (std::size_t i = 0; i < names.size();) {
        if (!first) os << " ";
        first = false;
        if (!typed) {
            os << names[i].name;
            ++i;
            continue;
        }
        // Group consecutive names of the same type under one "- type".
        std::size_t j = i;
        while (j < names.size() && names[j].type == names[i].type) ++j;
        for (std::size_t k = i; k < j; ++k) {
            os << names[k].name;
            if (k + 1 < j) os << " ";
        }
        os << " - " << names[i].type;
        i = j;
    }
}

void print_schema_atom(std::ostream& os, const Domain& domain, const ActionSchema& schema,
                       const SchemaAtom& atom) {
    os << "(" << domain.predicates[atom.predicate].name;
    for (int arg : atom.args) {
        if (arg >= 0) {
            os << " " << schema.params[arg].name;
        } else {
            os << " " << domain.constants[-(arg + 1)].name;
        }
    }
    os << ")";
}

void print_ground_atom(std::ostream& os, const LiftedProblem& problem,
                       const GroundAtomRef& atom) {
    os << "(" << problem.domain->predicates[atom.predicate].name;
    for (int arg : atom.args) {
        os << " " << problem.objects[arg].name;
    }
    os << ")";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open file '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

}  // namespace

std::shared_ptr<const Domain> parse_domain(std::string_view text) {
    return Parser(text).parse_domain_file();
}

LiftedProblem parse_problem(std::string_view text, std::shared_ptr<const Domain> domain) {
    return Parser(text).parse_problem_file(std::move(domain));
}

std::shared_ptr<const Domain> load_domain(const std::string& path) {
    return parse_domain(read_file(path));
}

LiftedProblem load_problem(const std::string& path, std::shared_ptr<const Domain> domain) {
    return parse_problem(read_file(path), std::move(domain));
}

std::string to_pddl(const Domain& domain) {
    std::ostringstream os;
    os << "(define (domain " << domain.name << ")\n";
    os << "  (:requirements :strips";
    if (domain.typed) os << " :typing";
    os << ")\n";
    if (!domain.types.empty()) {
        os << "  (:types";
        for (const TypeDecl& t : domain.types) {
            os << " " << t.name << " - " << t.parent;
        }
        os << ")\n";
    }
    if (!domain.constants.empty()) {
        os << "  (:constants ";
        print_typed_names(os, domain.constants, domain.typed);
        os << ")\n";
    }
    if (!domain.predicates.empty()) {
        os << "  (:predicates";
        for (const PredicateDecl& p : domain.predicates) {
            os << "\n    (" << p.name;
            for (std::size_t i = 0; i < p.param_types.size(); ++i) {
                os << " ?x" << i;
                if (domain.typed) os << " - " << p.param_types[i];
            }
            os << ")";
        }
        os << ")\n";
    }
    for (const ActionSchema& schema : domain.schemata) {
        os << "  (:action " << schema.name << "\n";
        os << "    :parameters (";
        print_typed_names(os, schema.params, domain.typed);
        os << ")\n";
        os << "    :precondition (and";
        for (const SchemaAtom& atom : schema.precondition) {
            os << " ";
            print_schema_atom(os, domain, schema, atom);
        }
        os << ")\n";
        os << "    :effect (and";
        for (const SchemaAtom& atom : schema.add_effects) {
            os << " ";
            print_schema_atom(os, domain, schema, atom);
        }
        for (const SchemaAtom& atom : schema.del_effects) {
            os << " (not ";
            print_schema_atom(os, domain, schema, atom);
            os << ")";
        }
        os << "))\n";
    }
    os << ")\n";
    return os.str();
}

std::string to_pddl(const LiftedProblem& problem) {
    const Domain& domain = *problem.domain;
    std::ostringstream os;
    os << "(define (problem " << problem.name << ")\n";
    os << "  (:domain " << domain.name << ")\n";
    if (problem.objects.size() > domain.constants.size()) {
        os << "  (:objects ";
        std::vector<TypedName> declared(problem.objects.begin() + domain.constants.size(),
                                        problem.objects.end());
        print_typed_names(os, declared, domain.typed);
        os << ")\n";
    }
    os << "  (:init";
    for (const GroundAtomRef& atom : problem.init) {
        os << " ";
        print_ground_atom(os, problem, atom);
    }
    os << ")\n";
    os << "  (:goal (and";
    for (const GroundAtomRef& atom : problem.goal) {
        os << " ";
        print_ground_atom(os, problem, atom);
    }
    os << ")))\n";
    return os.str();
}

}  // namespace wlnovelty

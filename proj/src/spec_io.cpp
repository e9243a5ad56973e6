#include "profgen/spec_io.hpp"

#include <cctype>
#include <sstream>

#include "profgen/errors.hpp"
#include "profgen/eval.hpp"

namespace profgen {

bool valid_symptom_name(const std::string& name) {
    if (name.empty()) return false;
    for (char c : name)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    return true;
}

namespace {

enum class Tok {
    LBracket, RBracket, LBrace, RBrace, LParen, RParen, Comma, Colon,
    Int, Name, End
};

struct Token {
    Tok kind = Tok::End;
    std::string text;
    std::size_t value = 0;
    int line = 1;
    int col = 1;
};

// Tokenizer over the bracket/brace notation. '#' starts a comment; a comment
// is surfaced to the caller (used for criterion labels), then skipped.
class Lexer {
public:
    Lexer(const std::string& text, ParseDiagnostics& diags)
        : s_(text), diags_(diags) {
        advance();
    }

    const Token& peek() const { return cur_; }
    Token take() {
        Token t = cur_;
        advance();
        return t;
    }
    bool at(Tok k) const { return cur_.kind == k; }

    // Comments seen between the previous token and the current one.
    std::vector<std::string> pop_comments() {
        std::vector<std::string> out;
        out.swap(comments_);
        return out;
    }

private:
    void advance() {
        comments_.clear();
        skip_space_and_comments();
        cur_.line = line_;
        cur_.col = col_;
        if (pos_ >= s_.size()) {
            cur_.kind = Tok::End;
            return;
        }
        char c = s_[pos_];
        switch (c) {
            case '[': cur_.kind = Tok::LBracket; bump(); return;
            case ']': cur_.kind = Tok::RBracket; bump(); return;
            case '{': cur_.kind = Tok::LBrace; bump(); return;
            case '}': cur_.kind = Tok::RBrace; bump(); return;
            case '(': cur_.kind = Tok::LParen; bump(); return;
            case ')': cur_.kind = Tok::RParen; bump(); return;
            case ',': cur_.kind = Tok::Comma; bump(); return;
            case ':': cur_.kind = Tok::Colon; bump(); return;
            default: break;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::string digits;
            while (pos_ < s_.size() &&
                   std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
                digits += s_[pos_];
                bump();
            }
            // A digit run followed by name characters is a name (names may
            // not start with a digit in isolation, but e.g. "2x" is invalid).
            if (pos_ < s_.size() &&
                (std::isalpha(static_cast<unsigned char>(s_[pos_])) ||
                 s_[pos_] == '_')) {
                std::string rest = digits;
                while (pos_ < s_.size() &&
                       (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                        s_[pos_] == '_')) {
                    rest += s_[pos_];
                    bump();
                }
                cur_.kind = Tok::Name;
                cur_.text = rest;
                return;
            }
            cur_.kind = Tok::Int;
            cur_.text = digits;
            cur_.value = 0;
            for (char d : digits) cur_.value = cur_.value * 10 + std::size_t(d - '0');
            return;
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::string name;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                    s_[pos_] == '_')) {
                name += s_[pos_];
                bump();
            }
            cur_.kind = Tok::Name;
            cur_.text = name;
            return;
        }
        diags_.error(line_, col_, "BadChar",
                     std::string("unexpected character '") + c + "'");
        bump();
        advance();
    }

    void skip_space_and_comments() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '\n' || c == ' ' || c == '\t' || c == '\r') {
                bump();
            } else if (c == '#') {
                bump();
                std::string text;
                while (pos_ < s_.size() && s_[pos_] != '\n') {
                    text += s_[pos_];
                    bump();
                }
                while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
                    text.erase(text.begin());
                while (!text.empty() && (text.back() == ' ' || text.back() == '\r' ||
                                         text.back() == '\t'))
                    text.pop_back();
                comments_.push_back(text);
            } else {
                break;
            }
        }
    }

    void bump() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    const std::string& s_;
    ParseDiagnostics& diags_;
    std::size_t pos_ = 0;
    int line_ = 1;
    int col_ = 1;
    Token cur_;
    std::vector<std::string> comments_;
};

// A short trailing comment like "A", "B1", or "A+B" names the criterion.
bool label_like(const std::string& s) {
    if (s.empty() || s.size() > 3) return false;
    for (char c : s)
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '+')
            return false;
    return true;
}

// Parsed element of a bracketed criterion: a set, a nested list of sets, an
// integer, or a parenthesized count triple.
struct Element {
    enum class Kind { Set, List, Int, Triple } kind = Kind::Set;
    SymptomSet set;
    std::vector<SymptomSet> list;
    std::size_t value = 0;
    std::size_t triple[3] = {0, 0, 0};
    int line = 0;
    int col = 0;
};

class DslParser {
public:
    DslParser(const std::string& text, ParseDiagnostics& diags)
        : lex_(text, diags), diags_(diags) {}

    // Grammar: file := [ "name" ":" Name ] criterion* ; criterion := '[' ... ']'
    std::optional<DisorderSpec> parse_disorder(const std::string& default_name) {
        std::string name = default_name;
        if (lex_.at(Tok::Name) && lex_.peek().text == "name") {
            Token key = lex_.take();
            if (lex_.at(Tok::Colon)) lex_.take();
            if (!lex_.at(Tok::Name)) {
                // "name" with no following identifier: it was a symptom-like
                // stray token at top level.
                diags_.error(key.line, key.col, "Syntax",
                             "expected a disorder name after 'name'");
                return std::nullopt;
            }
            name = lex_.take().text;
        }

        std::vector<Criterion> criteria;
        while (!lex_.at(Tok::End)) {
            if (!lex_.at(Tok::LBracket)) {
                Token t = lex_.peek();
                diags_.error(t.line, t.col, "Syntax",
                             "expected '[' starting a criterion");
                return std::nullopt;
            }
            Token open = lex_.peek();
            Generator g;
            if (!parse_criterion(g)) return std::nullopt;
            Criterion c;
            c.gen = std::move(g);
            // A trailing "#A"-style comment on the criterion names its label.
            (void)open;
            for (const auto& comment : lex_.pop_comments())
                if (label_like(comment)) {
                    c.label = comment;
                    break;
                }
            criteria.push_back(std::move(c));
        }
        return finish(name, std::move(criteria), diags_, order_);
    }

    bool parse_generator_only(Generator& g) {
        if (!lex_.at(Tok::LBracket)) {
            Token t = lex_.peek();
            diags_.error(t.line, t.col, "Syntax", "expected '[' starting a generator");
            return false;
        }
        if (!parse_criterion(g)) return false;
        if (!lex_.at(Tok::End)) {
            Token t = lex_.peek();
            diags_.error(t.line, t.col, "Syntax", "trailing input after generator");
            return false;
        }
        return true;
    }

    const std::vector<std::string>& order() const { return order_; }

    // Shape inference over the element kinds of one bracketed criterion.
    static std::optional<Generator> infer(const std::vector<Element>& es,
                                          int line, int col,
                                          ParseDiagnostics& diags) {
        auto all_sets = [&](std::size_t from, std::size_t to) {
            for (std::size_t i = from; i < to; ++i)
                if (es[i].kind != Element::Kind::Set) return false;
            return true;
        };
        if (es.size() == 1 && es[0].kind == Element::Kind::Set)
            return Generator::g0(es[0].set);
        if (es.size() == 2 && es[0].kind == Element::Kind::Set &&
            es[1].kind == Element::Kind::Int)
            return Generator::g1(es[0].set, es[1].value);
        if (es.size() >= 3 && all_sets(0, es.size() - 1) &&
            es.back().kind == Element::Kind::Int) {
            std::vector<SymptomSet> sets;
            for (std::size_t i = 0; i + 1 < es.size(); ++i) sets.push_back(es[i].set);
            return Generator::g2(std::move(sets), es.back().value);
        }
        if (es.size() == 2 && es[0].kind == Element::Kind::List &&
            es[1].kind == Element::Kind::List)
            return Generator::g3(es[0].list, es[1].list);
        if (es.size() == 3 && es[0].kind == Element::Kind::List &&
            es[1].kind == Element::Kind::List &&
            es[2].kind == Element::Kind::Triple)
            return Generator::g4(es[0].list, es[1].list, es[2].triple[0],
                                 es[2].triple[1], es[2].triple[2]);
        diags.error(line, col, "AmbiguousVariant",
                    "bracket shape matches no generator template");
        return std::nullopt;
    }

    static std::optional<DisorderSpec> finish(std::string name,
                                              std::vector<Criterion> criteria,
                                              ParseDiagnostics& diags,
                                              std::vector<std::string> order) {
        if (!diags.ok()) return std::nullopt;
        try {
            DisorderSpec d = make_disorder(std::move(name), std::move(criteria),
                                           std::move(order));
            for (const auto& c : d.criteria)
                for (const auto& w : lint(c.gen))
                    diags.warn(0, 0, "Lint",
                               (c.label.empty() ? std::string("criterion")
                                                : "criterion " + c.label) +
                                   ": " + w);
            if (!d.disjoint_criteria)
                diags.warn(0, 0, "Overlap",
                           "criterion domains overlap: exact counting is "
                           "unavailable and enumeration deduplicates");
            return d;
        } catch (const InvalidGenerator& e) {
            diags.error(0, 0, "InvalidGenerator", e.what());
            return std::nullopt;
        }
    }

private:
    bool parse_criterion(Generator& g) {
        Token open = lex_.take();  // '['
        std::vector<Element> es;
        if (lex_.at(Tok::RBracket)) {
            diags_.error(open.line, open.col, "AmbiguousVariant",
                         "empty criterion brackets");
            return false;
        }
        while (true) {
            Element e;
            if (!parse_element(e)) return false;
            es.push_back(std::move(e));
            if (lex_.at(Tok::Comma)) {
                lex_.take();
                continue;
            }
            break;
        }
        if (!expect(Tok::RBracket, "']'")) return false;
        auto inferred = infer(es, open.line, open.col, diags_);
        if (!inferred) return false;
        g = std::move(*inferred);
        try {
            validate(g);
        } catch (const InvalidGenerator& e) {
            diags_.error(open.line, open.col, "InvalidGenerator", e.what());
            return false;
        }
        return true;
    }

    bool parse_element(Element& e) {
        Token t = lex_.peek();
        e.line = t.line;
        e.col = t.col;
        switch (t.kind) {
            case Tok::LBrace:
                e.kind = Element::Kind::Set;
                return parse_set(e.set);
            case Tok::LBracket:
                e.kind = Element::Kind::List;
                return parse_list(e.list);
            case Tok::Int:
                e.kind = Element::Kind::Int;
                e.value = lex_.take().value;
                return true;
            case Tok::LParen:
                e.kind = Element::Kind::Triple;
                return parse_triple(e.triple);
            default:
                diags_.error(t.line, t.col, "Syntax",
                             "expected a set, list, count, or count triple");
                return false;
        }
    }

    bool parse_set(SymptomSet& out) {
        lex_.take();  // '{'
        std::vector<std::string> names;
        if (!lex_.at(Tok::RBrace)) {
            while (true) {
                Token t = lex_.peek();
                if (t.kind != Tok::Name) {
                    diags_.error(t.line, t.col, "Syntax", "expected a symptom name");
                    return false;
                }
                lex_.take();
                names.push_back(t.text);
                note(t.text);
                if (lex_.at(Tok::Comma)) {
                    lex_.take();
                    continue;
                }
                break;
            }
        }
        if (!expect(Tok::RBrace, "'}'")) return false;
        out = SymptomSet(std::move(names));
        return true;
    }

    bool parse_list(std::vector<SymptomSet>& out) {
        lex_.take();  // '['
        while (true) {
            Token t = lex_.peek();
            if (t.kind != Tok::LBrace) {
                diags_.error(t.line, t.col, "Syntax", "expected a set inside a list");
                return false;
            }
            SymptomSet s;
            if (!parse_set(s)) return false;
            out.push_back(std::move(s));
            if (lex_.at(Tok::Comma)) {
                lex_.take();
                continue;
            }
            break;
        }
        return expect(Tok::RBracket, "']'");
    }

    bool parse_triple(std::size_t out[3]) {
        lex_.take();  // '('
        for (int i = 0; i < 3; ++i) {
            Token t = lex_.peek();
            if (t.kind != Tok::Int) {
                diags_.error(t.line, t.col, "Syntax",
                             "expected an integer in the count triple");
                return false;
            }
            out[i] = lex_.take().value;
            if (i < 2 && !expect(Tok::Comma, "','")) return false;
        }
        return expect(Tok::RParen, "')'");
    }

    bool expect(Tok k, const char* what) {
        if (lex_.at(k)) {
            lex_.take();
            return true;
        }
        Token t = lex_.peek();
        diags_.error(t.line, t.col, "Syntax",
                     std::string("expected ") + what + ", got '" +
                         (t.kind == Tok::End ? "<end>" : t.text.empty() ? "?" : t.text) +
                         "'");
        return false;
    }

    void note(const std::string& name) {
        for (const auto& n : order_)
            if (n == name) return;
        order_.push_back(name);
    }

    Lexer lex_;
    ParseDiagnostics& diags_;
    std::vector<std::string> order_;
};

std::string strip(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

// Parses a DSL value fragment (set, list, or triple) on one canonical line.
struct ValueParser {
    ValueParser(const std::string& text, int line, ParseDiagnostics& diags,
                std::vector<std::string>& order)
        : lex(text, diags), diags(diags), order(order), line(line) {}

    bool set(SymptomSet& out) {
        if (!lex.at(Tok::LBrace)) return fail("expected '{'");
        lex.take();
        std::vector<std::string> names;
        if (!lex.at(Tok::RBrace)) {
            while (true) {
                if (!lex.at(Tok::Name)) return fail("expected a symptom name");
                Token t = lex.take();
                names.push_back(t.text);
                note(t.text);
                if (lex.at(Tok::Comma)) {
                    lex.take();
                    continue;
                }
                break;
            }
        }
        if (!lex.at(Tok::RBrace)) return fail("expected '}'");
        lex.take();
        out = SymptomSet(std::move(names));
        return true;
    }

    bool list(std::vector<SymptomSet>& out) {
        if (!lex.at(Tok::LBracket)) return fail("expected '['");
        lex.take();
        while (true) {
            SymptomSet s;
            if (!set(s)) return false;
            out.push_back(std::move(s));
            if (lex.at(Tok::Comma)) {
                lex.take();
                continue;
            }
            break;
        }
        if (!lex.at(Tok::RBracket)) return fail("expected ']'");
        lex.take();
        return true;
    }

    bool triple(std::size_t out[3]) {
        if (!lex.at(Tok::LParen)) return fail("expected '('");
        lex.take();
        for (int i = 0; i < 3; ++i) {
            if (!lex.at(Tok::Int)) return fail("expected an integer");
            out[i] = lex.take().value;
            if (i < 2) {
                if (!lex.at(Tok::Comma)) return fail("expected ','");
                lex.take();
            }
        }
        if (!lex.at(Tok::RParen)) return fail("expected ')'");
        lex.take();
        return true;
    }

    bool integer(std::size_t& out) {
        if (!lex.at(Tok::Int)) return fail("expected an integer");
        out = lex.take().value;
        return true;
    }

    bool done() {
        if (lex.at(Tok::End)) return true;
        return fail("trailing input on line");
    }

    bool fail(const char* msg) {
        diags.error(line, lex.peek().col, "Syntax", msg);
        return false;
    }

    void note(const std::string& name) {
        for (const auto& n : order)
            if (n == name) return;
        order.push_back(name);
    }

    Lexer lex;
    ParseDiagnostics& diags;
    std::vector<std::string>& order;
    int line;
};

// Canonical-format criterion under construction.
struct PendingCriterion {
    std::string label;
    std::string gen;
    int gen_line = 0;
    bool has_set = false, has_sets = false, has_k = false;
    bool has_list1 = false, has_list2 = false, has_req = false;
    SymptomSet set;
    std::vector<SymptomSet> sets;
    std::size_t k = 0;
    std::vector<SymptomSet> list1, list2;
    std::size_t req[3] = {0, 0, 0};
};

bool finish_criterion(PendingCriterion& p, ParseDiagnostics& diags,
                      std::vector<Criterion>& out) {
    auto err = [&](const std::string& msg) {
        diags.error(p.gen_line, 1, "Syntax", msg);
        return false;
    };
    Generator g;
    if (p.gen == "G0") {
        if (!p.has_set) return err("G0 requires 'set'");
        if (p.has_sets || p.has_k || p.has_list1 || p.has_list2 || p.has_req)
            return err("G0 takes only 'set'");
        g = Generator::g0(p.set);
    } else if (p.gen == "G1") {
        if (!p.has_set || !p.has_k) return err("G1 requires 'set' and 'k'");
        if (p.has_sets || p.has_list1 || p.has_list2 || p.has_req)
            return err("G1 takes only 'set' and 'k'");
        g = Generator::g1(p.set, p.k);
    } else if (p.gen == "G2") {
        if (!p.has_sets || !p.has_k) return err("G2 requires 'sets' and 'k'");
        if (p.has_set || p.has_list1 || p.has_list2 || p.has_req)
            return err("G2 takes only 'sets' and 'k'");
        g = Generator::g2(p.sets, p.k);
    } else if (p.gen == "G3") {
        if (!p.has_list1 || !p.has_list2)
            return err("G3 requires 'list1' and 'list2'");
        if (p.has_set || p.has_sets || p.has_k || p.has_req)
            return err("G3 takes only 'list1' and 'list2'");
        g = Generator::g3(p.list1, p.list2);
    } else if (p.gen == "G4") {
        if (!p.has_list1 || !p.has_list2 || !p.has_req)
            return err("G4 requires 'list1', 'list2', and 'req'");
        if (p.has_set || p.has_sets || p.has_k)
            return err("G4 takes only 'list1', 'list2', and 'req'");
        g = Generator::g4(p.list1, p.list2, p.req[0], p.req[1], p.req[2]);
    } else {
        return err("unknown generator tag '" + p.gen + "'");
    }
    try {
        validate(g);
    } catch (const InvalidGenerator& e) {
        diags.error(p.gen_line, 1, "InvalidGenerator", e.what());
        return false;
    }
    out.push_back(Criterion{p.label, std::move(g)});
    return true;
}

std::string dsl_set(const SymptomSet& s) {
    std::string out = "{";
    bool first = true;
    for (const auto& n : s) {
        if (!first) out += ", ";
        out += n;
        first = false;
    }
    return out + "}";
}

std::string dsl_list(const std::vector<SymptomSet>& l) {
    std::string out = "[";
    for (std::size_t i = 0; i < l.size(); ++i) {
        if (i) out += ", ";
        out += dsl_set(l[i]);
    }
    return out + "]";
}

}  // namespace

ParseResult parse_dsl(const std::string& text, const std::string& default_name) {
    ParseResult res;
    DslParser p(text, res.diagnostics);
    res.spec = p.parse_disorder(default_name);
    if (!res.diagnostics.ok()) res.spec.reset();
    return res;
}

ParseResult parse_dsl_generator(const std::string& text) {
    ParseResult res;
    DslParser p(text, res.diagnostics);
    Generator g;
    if (p.parse_generator_only(g)) {
        std::vector<Criterion> cs{Criterion{"", std::move(g)}};
        res.spec = DslParser::finish("generator", std::move(cs), res.diagnostics,
                                     p.order());
    }
    if (!res.diagnostics.ok()) res.spec.reset();
    return res;
}

ParseResult parse_canonical(const std::string& text,
                            const std::string& default_name) {
    ParseResult res;
    ParseDiagnostics& diags = res.diagnostics;

    std::string name = default_name;
    std::vector<Criterion> criteria;
    std::vector<std::string> order;
    std::optional<PendingCriterion> pending;

    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    bool failed = false;
    while (std::getline(in, raw) && !failed) {
        ++lineno;
        std::string line = raw;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line = line.substr(0, hash);
        line = strip(line);
        if (line.empty()) continue;

        auto colon = line.find(':');
        if (colon == std::string::npos) {
            diags.error(lineno, 1, "Syntax", "expected 'key: value'");
            failed = true;
            break;
        }
        std::string key = strip(line.substr(0, colon));
        std::string value = strip(line.substr(colon + 1));

        auto need_pending = [&]() {
            if (pending) return true;
            diags.error(lineno, 1, "Syntax",
                        "'" + key + "' outside a criterion block");
            failed = true;
            return false;
        };

        if (key == "name") {
            name = value;
        } else if (key == "criterion") {
            if (pending && !finish_criterion(*pending, diags, criteria)) {
                failed = true;
                break;
            }
            pending = PendingCriterion{};
            pending->gen_line = lineno;
        } else if (key == "label") {
            if (!need_pending()) break;
            pending->label = value;
        } else if (key == "gen") {
            if (!need_pending()) break;
            pending->gen = value;
            pending->gen_line = lineno;
        } else if (key == "set") {
            if (!need_pending()) break;
            ValueParser v(value, lineno, diags, order);
            if (!(v.set(pending->set) && v.done())) { failed = true; break; }
            pending->has_set = true;
        } else if (key == "sets") {
            if (!need_pending()) break;
            ValueParser v(value, lineno, diags, order);
            if (!(v.list(pending->sets) && v.done())) { failed = true; break; }
            pending->has_sets = true;
        } else if (key == "k") {
            if (!need_pending()) break;
            ValueParser v(value, lineno, diags, order);
            if (!(v.integer(pending->k) && v.done())) { failed = true; break; }
            pending->has_k = true;
        } else if (key == "list1") {
            if (!need_pending()) break;
            ValueParser v(value, lineno, diags, order);
            if (!(v.list(pending->list1) && v.done())) { failed = true; break; }
            pending->has_list1 = true;
        } else if (key == "list2") {
            if (!need_pending()) break;
            ValueParser v(value, lineno, diags, order);
            if (!(v.list(pending->list2) && v.done())) { failed = true; break; }
            pending->has_list2 = true;
        } else if (key == "req") {
            if (!need_pending()) break;
            ValueParser v(value, lineno, diags, order);
            if (!(v.triple(pending->req) && v.done())) { failed = true; break; }
            pending->has_req = true;
        } else {
            diags.error(lineno, 1, "Syntax", "unknown key '" + key + "'");
            failed = true;
        }
    }
    if (!failed && pending && !finish_criterion(*pending, diags, criteria))
        failed = true;
    if (!failed && criteria.empty()) {
        diags.error(lineno, 1, "Syntax", "no criteria in file");
        failed = true;
    }
    if (!failed)
        res.spec = DslParser::finish(name, std::move(criteria), diags,
                                     std::move(order));
    if (!res.diagnostics.ok()) res.spec.reset();
    return res;
}

ParseResult parse_auto(const std::string& text, const std::string& default_name) {
    // Canonical files are key:value lines; the DSL never puts ':' before the
    // first bracket. Inspect the first meaningful character after an optional
    // "name:" header.
    std::istringstream in(text);
    std::string raw;
    int meaningful = 0;
    bool saw_colon_key = false;
    while (std::getline(in, raw)) {
        if (auto hash = raw.find('#'); hash != std::string::npos)
            raw = raw.substr(0, hash);
        std::string line = strip(raw);
        if (line.empty()) continue;
        ++meaningful;
        if (line.front() == '[') break;
        auto colon = line.find(':');
        if (colon != std::string::npos) {
            std::string key = strip(line.substr(0, colon));
            if (key != "name") {
                saw_colon_key = true;
                break;
            }
            continue;
        }
        break;
    }
    (void)meaningful;
    return saw_colon_key ? parse_canonical(text, default_name)
                         : parse_dsl(text, default_name);
}

std::string to_dsl(const Generator& g) {
    switch (g.kind) {
        case GenKind::G0:
            return "[" + dsl_set(g.set) + "]";
        case GenKind::G1:
            return "[" + dsl_set(g.set) + ", " + std::to_string(g.k) + "]";
        case GenKind::G2: {
            std::string out = "[";
            for (const auto& s : g.sets) out += dsl_set(s) + ", ";
            return out + std::to_string(g.k) + "]";
        }
        case GenKind::G3:
            return "[" + dsl_list(g.list1) + ", " + dsl_list(g.list2) + "]";
        case GenKind::G4:
            return "[" + dsl_list(g.list1) + ", " + dsl_list(g.list2) + ", (" +
                   std::to_string(g.req_r) + ", " + std::to_string(g.req_s) + ", " +
                   std::to_string(g.req_t) + ")]";
    }
    return "[]";
}

std::string to_dsl(const std::vector<Generator>& gs) {
    std::string out;
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (i) out += " ";
        out += to_dsl(gs[i]);
    }
    return out;
}

std::string serialize(const DisorderSpec& d, SpecFormat format) {
    std::ostringstream out;
    if (format == SpecFormat::Dsl) {
        out << "name: " << d.name << "\n";
        for (const auto& c : d.criteria) {
            out << to_dsl(c.gen);
            if (!c.label.empty()) out << "  # " << c.label;
            out << "\n";
        }
        return out.str();
    }
    out << "name: " << d.name << "\n";
    for (const auto& c : d.criteria) {
        out << "criterion:\n";
        if (!c.label.empty()) out << "  label: " << c.label << "\n";
        out << "  gen: " << to_string(c.gen.kind) << "\n";
        switch (c.gen.kind) {
            case GenKind::G0:
                out << "  set: " << dsl_set(c.gen.set) << "\n";
                break;
            case GenKind::G1:
                out << "  set: " << dsl_set(c.gen.set) << "\n";
                out << "  k: " << c.gen.k << "\n";
                break;
            case GenKind::G2:
                out << "  sets: " << dsl_list(c.gen.sets) << "\n";
                out << "  k: " << c.gen.k << "\n";
                break;
            case GenKind::G3:
                out << "  list1: " << dsl_list(c.gen.list1) << "\n";
                out << "  list2: " << dsl_list(c.gen.list2) << "\n";
                break;
            case GenKind::G4:
                out << "  list1: " << dsl_list(c.gen.list1) << "\n";
                out << "  list2: " << dsl_list(c.gen.list2) << "\n";
                out << "  req: (" << c.gen.req_r << ", " << c.gen.req_s << ", "
                    << c.gen.req_t << ")\n";
                break;
        }
    }
    return out.str();
}

}  // namespace profgen

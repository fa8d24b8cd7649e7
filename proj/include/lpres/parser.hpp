#pragma once

/*
 * Text format for L-presentations with named substitutions and named
 * subgroups. A file must start with the header line "# lpres v1" and
 * then contains one directive per line, with '#' starting a comment:
 *
 *   generators: a b
 *   fixed: a^2, b^2
 *   endo sigma: a -> a c a, b -> d, c -> b, d -> c
 *   iterated: (a d)^4
 *   subgroup K: a, b a b^-1
 *   invariant: yes
 *
 * Words are products of generators, with ^n for integer powers, ^w for
 * conjugation v^w = w^-1 v w, [u, v] = u^-1 v^-1 u v, parentheses for
 * grouping, and 1 for the empty word. Juxtaposition needs whitespace or
 * '*' between letters since names are matched longest first. When no
 * "invariant:" line is given, the presentation is marked invariant
 * exactly when it has no fixed relators.
 */

#include <cctype>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "presentation.hpp"
#include "word.hpp"

namespace lpres {

struct PresentationFile {
    LPresentation lp;
    std::vector<std::string> endo_names; // parallel to lp.substitutions
    std::vector<std::pair<std::string, std::vector<Word>>> subgroups;

    const std::vector<Word>& subgroup(const std::string& name) const {
        for (const auto& [n, words] : subgroups)
            if (n == name)
                return words;
        throw MalformedInputError("no subgroup named '" + name + "' in the file");
    }

    bool has_subgroup(const std::string& name) const {
        for (const auto& [n, words] : subgroups)
            if (n == name)
                return true;
        return false;
    }
};

namespace detail {

/* Character-level parser over one directive line, reporting positions
 * in the original file. */
class LineParser {
  public:
    LineParser(const std::string& line, int line_number, std::size_t start,
               const std::map<std::string, int>* generators)
        : line_(line), lineno_(line_number), pos_(start), generators_(generators) {}

    [[noreturn]] void fail(const std::string& msg) const {
        std::ostringstream os;
        os << "line " << lineno_ << ", column " << pos_ + 1 << ": " << msg;
        throw MalformedInputError(os.str());
    }

    void skip_ws() {
        while (pos_ < line_.size() && std::isspace(static_cast<unsigned char>(line_[pos_])))
            ++pos_;
    }

    bool eof() {
        skip_ws();
        return pos_ >= line_.size();
    }

    char peek() {
        skip_ws();
        return pos_ < line_.size() ? line_[pos_] : '\0';
    }

    bool accept(char c) {
        if (peek() != c)
            return false;
        ++pos_;
        return true;
    }

    void expect(char c, const std::string& what) {
        if (!accept(c))
            fail("expected " + what);
    }

    void expect_arrow() {
        skip_ws();
        if (pos_ + 1 < line_.size() && line_[pos_] == '-' && line_[pos_ + 1] == '>') {
            pos_ += 2;
            return;
        }
        fail("expected '->'");
    }

    std::string ident() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < line_.size() &&
            (std::isalpha(static_cast<unsigned char>(line_[pos_])) || line_[pos_] == '_')) {
            ++pos_;
            while (pos_ < line_.size() && (std::isalnum(static_cast<unsigned char>(line_[pos_])) ||
                                           line_[pos_] == '_'))
                ++pos_;
        }
        if (start == pos_)
            fail("expected a name");
        return line_.substr(start, pos_ - start);
    }

    long integer() {
        skip_ws();
        std::size_t start = pos_;
        if (pos_ < line_.size() && line_[pos_] == '-')
            ++pos_;
        std::size_t digits = pos_;
        while (pos_ < line_.size() && std::isdigit(static_cast<unsigned char>(line_[pos_])))
            ++pos_;
        if (pos_ == digits)
            fail("expected an integer");
        return std::stol(line_.substr(start, pos_ - start));
    }

    // word := factor { ['*'] factor }, stopping before ',', ')' or ']'
    Word word() {
        Word out;
        bool first = true;
        while (true) {
            char c = peek();
            if (c == '\0' || c == ',' || c == ')' || c == ']')
                break;
            if (!first && c == '*') {
                ++pos_;
                c = peek();
            }
            Word f = factor();
            out.insert(out.end(), f.begin(), f.end());
            first = false;
        }
        if (first)
            fail("expected a word");
        return reduce(out);
    }

    std::vector<Word> word_list() {
        std::vector<Word> out;
        if (eof())
            return out;
        while (true) {
            out.push_back(word());
            if (accept(','))
                continue;
            if (!eof())
                fail("unexpected text after word");
            return out;
        }
    }

  private:
    // factor := atom { '^' (integer | atom) }
    Word factor() {
        Word base = atom();
        while (accept('^')) {
            char c = peek();
            if (c == '-' || std::isdigit(static_cast<unsigned char>(c))) {
                base = power(base, static_cast<int>(integer()));
            } else {
                base = conjugate(base, atom());
            }
        }
        return base;
    }

    // atom := '(' word ')' | '[' word ',' word ']' | '1' | generator
    Word atom() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Word w = word();
            expect(')', "')'");
            return w;
        }
        if (c == '[') {
            ++pos_;
            Word u = word();
            expect(',', "',' between commutator arguments");
            Word v = word();
            expect(']', "']'");
            return commutator(u, v);
        }
        if (c == '1') {
            ++pos_;
            return {};
        }
        std::size_t at = pos_;
        std::string name = ident();
        if (!generators_)
            fail("generators must be declared before words");
        auto it = generators_->find(name);
        if (it == generators_->end()) {
            pos_ = at;
            fail("undeclared generator '" + name + "'");
        }
        return {it->second + 1};
    }

    const std::string& line_;
    int lineno_;
    std::size_t pos_;
    const std::map<std::string, int>* generators_;
};

} // namespace detail

inline PresentationFile parse_lpres_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;

    auto fail_line = [&](const std::string& msg) -> void {
        std::ostringstream os;
        os << "line " << lineno << ": " << msg;
        throw MalformedInputError(os.str());
    };

    if (!std::getline(in, line)) {
        ++lineno; // empty input still reports against line 1
        fail_line("first line must be '# lpres v1'");
    }
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
        line.pop_back();
    if (line != "# lpres v1")
        fail_line("first line must be '# lpres v1'");

    PresentationFile file;
    std::map<std::string, int> generators;
    bool have_generators = false;
    bool have_invariant = false;

    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.resize(hash);
        detail::LineParser head(line, lineno, 0, have_generators ? &generators : nullptr);
        if (head.eof())
            continue;
        std::string keyword = head.ident();

        if (keyword == "generators") {
            if (have_generators)
                fail_line("duplicate generators line");
            head.expect(':', "':'");
            std::vector<std::string> names;
            while (!head.eof()) {
                if (head.accept(','))
                    continue;
                names.push_back(head.ident());
            }
            if (names.empty())
                fail_line("generators line declares no generators");
            for (std::size_t i = 0; i < names.size(); ++i)
                if (!generators.emplace(names[i], static_cast<int>(i)).second)
                    fail_line("duplicate generator '" + names[i] + "'");
            file.lp.alphabet = Alphabet(names);
            have_generators = true;
            continue;
        }

        if (keyword == "invariant") {
            head.expect(':', "':'");
            std::string value = head.ident();
            if (value == "yes")
                file.lp.invariant = true;
            else if (value == "no")
                file.lp.invariant = false;
            else
                fail_line("invariant must be 'yes' or 'no'");
            if (!head.eof())
                fail_line("unexpected text after invariant value");
            have_invariant = true;
            continue;
        }

        if (!have_generators)
            fail_line("generators must be declared before '" + keyword + "'");

        if (keyword == "fixed" || keyword == "iterated") {
            head.expect(':', "':'");
            for (Word& w : head.word_list()) {
                auto& bucket = keyword == "fixed" ? file.lp.fixed : file.lp.iterated;
                bucket.push_back(std::move(w));
            }
            continue;
        }

        if (keyword == "endo") {
            std::string name = head.ident();
            head.expect(':', "':'");
            for (const std::string& seen : file.endo_names)
                if (seen == name)
                    fail_line("duplicate substitution name '" + name + "'");
            FreeEndomorphism endo;
            endo.images.assign(generators.size(), Word{});
            std::vector<bool> mapped(generators.size(), false);
            while (true) {
                std::string gen = head.ident();
                auto it = generators.find(gen);
                if (it == generators.end())
                    fail_line("undeclared generator '" + gen + "' in substitution");
                if (mapped[static_cast<std::size_t>(it->second)])
                    fail_line("generator '" + gen + "' mapped twice in substitution");
                head.expect_arrow();
                endo.images[static_cast<std::size_t>(it->second)] = head.word();
                mapped[static_cast<std::size_t>(it->second)] = true;
                if (head.accept(','))
                    continue;
                if (!head.eof())
                    fail_line("unexpected text after substitution image");
                break;
            }
            for (std::size_t i = 0; i < mapped.size(); ++i)
                if (!mapped[i])
                    fail_line("substitution '" + name + "' does not map generator '" +
                              file.lp.alphabet.names[i] + "'");
            file.lp.substitutions.push_back(std::move(endo));
            file.endo_names.push_back(std::move(name));
            continue;
        }

        if (keyword == "subgroup") {
            std::string name = head.ident();
            head.expect(':', "':'");
            if (file.has_subgroup(name))
                fail_line("duplicate subgroup name '" + name + "'");
            file.subgroups.emplace_back(std::move(name), head.word_list());
            continue;
        }

        fail_line("unknown directive '" + keyword + "'");
    }

    if (!have_generators)
        throw MalformedInputError("missing generators line");
    if (!have_invariant)
        file.lp.invariant = file.lp.fixed.empty();
    file.lp.validate();
    return file;
}

inline PresentationFile parse_lpres_path(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw MalformedInputError("cannot read file '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_lpres_text(buffer.str());
}

} // namespace lpres

#include "nsize/dsl.hpp"

#include <cctype>
#include <sstream>

namespace nsize {

namespace {

struct ParseFailure {
    ParseError error;
};

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    SetExpr parse_top() {
        SetExpr e = parse_expr();
        skip_ws();
        if (pos_ != text_.size())
            fail(pos_, "unexpected trailing input", {"'|'", "'\\'", "'&'", "end of input"});
        return e;
    }

  private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(std::size_t at, std::string message,
                           std::vector<std::string> expected) {
        ParseError err;
        err.span = {at, std::min(at + 1, text_.size())};
        err.message = std::move(message);
        err.expected = std::move(expected);
        throw ParseFailure{std::move(err)};
    }

    void skip_ws() {
        while (pos_ < text_.size() &&
               std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool try_consume(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c, const char* what) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(pos_, std::string("expected ") + what, {std::string("'") + c + "'"});
        ++pos_;
    }

    std::string peek_word() {
        skip_ws();
        std::size_t end = pos_;
        while (end < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[end]))))
            ++end;
        return std::string(text_.substr(pos_, end - pos_));
    }

    BigInt parse_int(const char* what) {
        skip_ws();
        const std::size_t start = pos_;
        while (pos_ < text_.size() &&
               std::isdigit(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
        if (pos_ == start)
            fail(start, std::string("expected ") + what, {"integer"});
        return BigInt(std::string(text_.substr(start, pos_ - start)));
    }

    std::vector<BigInt> parse_intlist_braced() {
        expect('{', "'{'");
        std::vector<BigInt> values;
        skip_ws();
        if (try_consume('}')) return values;
        while (true) {
            const std::size_t at = pos_;
            BigInt v = parse_int("set element");
            if (v < 1) fail(at, "set elements must be >= 1", {"integer >= 1"});
            values.push_back(std::move(v));
            skip_ws();
            if (try_consume('}')) break;
            expect(',', "','");
        }
        return values;
    }

    SetExpr parse_expr() {
        SetExpr e = parse_term();
        while (true) {
            skip_ws();
            if (try_consume('|')) {
                e = e | parse_term();
            } else if (try_consume('\\')) {
                e = e - parse_term();
            } else {
                return e;
            }
        }
    }

    SetExpr parse_term() {
        SetExpr e = parse_factor();
        while (try_consume('&')) e = e & parse_factor();
        return e;
    }

    SetExpr parse_factor() {
        skip_ws();
        if (try_consume('~')) return ~parse_factor();
        if (try_consume('(')) {
            SetExpr e = parse_expr();
            expect(')', "')'");
            return e;
        }
        return parse_atom();
    }

    SetExpr parse_atom() {
        skip_ws();
        const std::size_t at = pos_;
        const std::string word = peek_word();
        if (word.empty())
            fail(at, "expected a set atom",
                 {"empty", "all", "finite", "cofinite", "mod", "powers", "primes",
                  "superexp", "bitodd", "leading1", "'('", "'~'"});
        pos_ += word.size();
        if (word == "empty") return SetExpr::empty();
        if (word == "all") return SetExpr::full();
        if (word == "finite") return SetExpr::finite(parse_intlist_braced());
        if (word == "cofinite") return SetExpr::cofinite(parse_intlist_braced());
        if (word == "primes") return SetExpr::primes();
        if (word == "superexp") return SetExpr::super_exponential();
        if (word == "bitodd") return SetExpr::bit_length_odd();
        if (word == "leading1") return SetExpr::leading_digit(1);
        if (word == "mod") {
            const std::size_t a_at = pos_;
            BigInt a = parse_int("modulus");
            if (a < 1) fail(a_at, "modulus must be >= 1", {"integer >= 1"});
            const std::size_t i_at = pos_;
            BigInt i = parse_int("second integer (residue)");
            if (i >= a) fail(i_at, "residue must be below the modulus", {});
            return SetExpr::arith_prog(std::move(a), std::move(i));
        }
        if (word == "powers") {
            const std::size_t p_at = pos_;
            const BigInt p = parse_int("exponent");
            if (p < 2 || p > 64) fail(p_at, "powers exponent must be in 2..64", {});
            return SetExpr::powers(static_cast<unsigned>(p));
        }
        fail(at, "unknown atom '" + word + "'",
             {"empty", "all", "finite", "cofinite", "mod", "powers", "primes",
              "superexp", "bitodd", "leading1"});
    }
};

}  // namespace

ParseResult parse(std::string_view text) {
    try {
        Parser parser(text);
        return parser.parse_top();
    } catch (const ParseFailure& failure) {
        return failure.error;
    }
}

std::string format_parse_error(std::string_view text, const ParseError& error) {
    std::ostringstream os;
    os << "parse error at byte " << error.span.begin << ": " << error.message;
    if (!error.expected.empty()) {
        os << " (expected ";
        for (std::size_t i = 0; i < error.expected.size(); ++i) {
            if (i) os << ", ";
            os << error.expected[i];
        }
        os << ")";
    }
    os << "\n  " << text << "\n  ";
    for (std::size_t i = 0; i < error.span.begin && i < text.size(); ++i)
        os << (text[i] == '\t' ? '\t' : ' ');
    os << "^";
    return os.str();
}

}  // namespace nsize

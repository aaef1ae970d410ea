#include "idealtop/parse.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>

#include "idealtop/circle.hpp"

namespace idealtop {

namespace {

class Cursor {
public:
    explicit Cursor(std::string_view src) : src_(src) {}

    void ws() {
        while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        ws();
        if (pos_ < src_.size() && src_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c) {
        if (!accept(c)) throw ParseError(std::string("expected '") + c + "'", pos_);
    }

    bool done() {
        ws();
        return pos_ == src_.size();
    }

    char peek() {
        ws();
        return pos_ < src_.size() ? src_[pos_] : '\0';
    }

    std::string ident() {
        ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() &&
               (std::isalnum(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '-' ||
                src_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) throw ParseError("expected a name", pos_);
        return std::string(src_.substr(start, pos_ - start));
    }

    std::uint64_t natural() {
        ws();
        std::size_t start = pos_;
        while (pos_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[pos_]))) ++pos_;
        if (pos_ == start) throw ParseError("expected a number", pos_);
        return std::strtoull(std::string(src_.substr(start, pos_ - start)).c_str(), nullptr, 10);
    }

    double real() {
        ws();
        std::size_t start = pos_;
        if (pos_ < src_.size() && (src_[pos_] == '-' || src_[pos_] == '+')) ++pos_;
        while (pos_ < src_.size() &&
               (std::isdigit(static_cast<unsigned char>(src_[pos_])) || src_[pos_] == '.'))
            ++pos_;
        if (pos_ == start) throw ParseError("expected a number", pos_);
        return std::strtod(std::string(src_.substr(start, pos_ - start)).c_str(), nullptr);
    }

    // consume up to the given delimiter at paren depth zero
    std::string until(char delim) {
        ws();
        std::size_t start = pos_;
        int depth = 0;
        while (pos_ < src_.size()) {
            char c = src_[pos_];
            if (c == '(') ++depth;
            if (c == ')') {
                if (depth == 0) break;
                --depth;
            }
            if (c == delim && depth == 0) break;
            ++pos_;
        }
        if (pos_ == start) throw ParseError("expected an expression", pos_);
        return std::string(src_.substr(start, pos_ - start));
    }

    std::size_t pos() const { return pos_; }

private:
    std::string_view src_;
    std::size_t pos_ = 0;
};

SetPtr set_expr(Cursor& c);

std::vector<SetPtr> set_args(Cursor& c, std::size_t min_count) {
    c.expect('(');
    std::vector<SetPtr> out;
    out.push_back(set_expr(c));
    while (c.accept(',')) out.push_back(set_expr(c));
    c.expect(')');
    if (out.size() < min_count)
        throw ParseError("expected at least " + std::to_string(min_count) + " arguments", c.pos());
    return out;
}

SetPtr set_expr(Cursor& c) {
    auto name = c.ident();
    if (name == "finite") {
        c.expect('{');
        std::vector<std::uint64_t> elems;
        if (!c.accept('}')) {
            elems.push_back(c.natural());
            while (c.accept(',')) elems.push_back(c.natural());
            c.expect('}');
        }
        std::sort(elems.begin(), elems.end());
        elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
        return finite(std::move(elems));
    }
    if (name == "arith") {
        c.expect('(');
        auto b = c.natural();
        c.expect(',');
        auto m = c.natural();
        c.expect(')');
        return arith(b, m);
    }
    if (name == "block") {
        c.expect('(');
        auto i = c.natural();
        c.expect(')');
        return block(i);
    }
    if (name == "tail") {
        c.expect('(');
        auto n = c.natural();
        c.expect(')');
        return tail(n);
    }
    if (name == "naturals") return naturals();
    if (name == "empty") return empty_set();
    if (name == "squares") return counted_squares();
    if (name == "union") {
        auto args = set_args(c, 2);
        SetPtr u = args[0];
        for (std::size_t i = 1; i < args.size(); ++i) u = set_union(u, args[i]);
        return u;
    }
    if (name == "inter") {
        auto args = set_args(c, 2);
        SetPtr u = args[0];
        for (std::size_t i = 1; i < args.size(); ++i) u = set_inter(u, args[i]);
        return u;
    }
    if (name == "diff") {
        auto args = set_args(c, 2);
        if (args.size() != 2) throw ParseError("diff takes two arguments", c.pos());
        return set_diff(args[0], args[1]);
    }
    if (name == "compl") {
        auto args = set_args(c, 1);
        if (args.size() != 1) throw ParseError("compl takes one argument", c.pos());
        return set_compl(args[0]);
    }
    throw ParseError("unknown set constructor '" + name + "'", c.pos());
}

IdealPtr ideal_expr(Cursor& c) {
    auto name = c.ident();
    if (name == "fin") return ideal_fin();
    if (name == "i1") return ideal_i1();
    if (name == "i2") return ideal_i2();
    if (name == "i3") return ideal_i3();
    if (name == "id") return ideal_id();
    if (name == "local-blocks") return ideal_local_blocks();
    if (name == "restrict") {
        c.expect('(');
        auto base = ideal_expr(c);
        c.expect(',');
        auto M = set_expr(c);
        c.expect(')');
        return restrict_ideal(base, M).ideal;
    }
    throw ParseError("unknown ideal '" + name + "'", c.pos());
}

Value value_expr(Cursor& c) {
    if (c.peek() == '(') {
        c.expect('(');
        double x = c.real();
        c.expect(',');
        double y = c.real();
        c.expect(')');
        return Value::plane(x, y);
    }
    if (std::isalpha(static_cast<unsigned char>(c.peek()))) {
        auto name = c.ident();
        if (name == "alpha") return circle_alpha();
        if (name.size() == 1) return Value::point(name);
        throw ParseError("unknown value '" + name + "'", c.pos());
    }
    return Value::real(c.real());
}

} // namespace

Value parse_value(std::string_view src) {
    Cursor c(src);
    auto v = value_expr(c);
    if (!c.done()) throw ParseError("unexpected trailing input", c.pos());
    return v;
}

SetPtr parse_setexpr(std::string_view src) {
    Cursor c(src);
    auto e = set_expr(c);
    if (!c.done()) throw ParseError("unexpected trailing input", c.pos());
    return e;
}

IdealPtr parse_ideal(std::string_view src) {
    Cursor c(src);
    auto i = ideal_expr(c);
    if (!c.done()) throw ParseError("unexpected trailing input", c.pos());
    return i;
}

Seq parse_seq(std::string_view src) {
    Cursor c(src);
    auto kind = c.ident();
    if (kind == "closed") {
        c.expect('(');
        auto body = c.until(')');
        c.expect(')');
        if (!c.done()) throw ParseError("unexpected trailing input", c.pos());
        return closed_form(body);
    }
    if (kind == "fibers") {
        c.expect('{');
        std::vector<std::pair<Value, SetPtr>> fibers;
        do {
            auto v = value_expr(c);
            c.expect(':');
            fibers.emplace_back(v, set_expr(c));
        } while (c.accept(';'));
        c.expect('}');
        if (!c.done()) throw ParseError("unexpected trailing input", c.pos());
        Codomain cod = Codomain::Real;
        for (const auto& [v, f] : fibers) {
            if (v.kind == Value::Kind::Plane) cod = Codomain::Plane;
            if (v.kind == Value::Kind::Label) cod = Codomain::FinitePoints;
        }
        return fiber_map(std::move(fibers), naturals(), cod);
    }
    if (kind == "blockform") {
        c.expect('(');
        auto body = c.until(';');
        c.expect(';');
        if (c.ident() != "init") throw ParseError("expected 'init'", c.pos());
        std::vector<double> init;
        init.push_back(c.real());
        while (c.accept(',')) init.push_back(c.real());
        c.expect(')');
        if (!c.done()) throw ParseError("unexpected trailing input", c.pos());
        return block_formula(body, std::move(init));
    }
    throw ParseError("unknown sequence form '" + kind + "'", c.pos());
}

FinSpace parse_space(std::string_view src) {
    Cursor c(src);
    if (c.ident() != "space") throw ParseError("expected 'space'", c.pos());
    c.expect('{');
    if (c.ident() != "points") throw ParseError("expected 'points'", c.pos());
    c.expect(':');
    std::vector<std::string> points;
    points.push_back(c.ident());
    while (c.accept(',')) points.push_back(c.ident());
    c.expect(';');
    if (c.ident() != "opens") throw ParseError("expected 'opens'", c.pos());
    c.expect(':');

    auto index_of = [&points, &c](const std::string& l) {
        for (std::size_t i = 0; i < points.size(); ++i)
            if (points[i] == l) return i;
        throw ParseError("unknown point '" + l + "' in open set", c.pos());
    };

    std::vector<Mask> opens;
    do {
        c.expect('{');
        Mask m = 0;
        if (!c.accept('}')) {
            m |= Mask{1} << index_of(c.ident());
            while (c.accept(',')) m |= Mask{1} << index_of(c.ident());
            c.expect('}');
        }
        opens.push_back(m);
    } while (c.accept(','));
    c.expect('}');
    if (!c.done()) throw ParseError("unexpected trailing input", c.pos());

    try {
        return make_space(std::move(points), std::move(opens));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what(), c.pos());
    }
}

} // namespace idealtop

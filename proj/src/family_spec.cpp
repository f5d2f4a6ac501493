#include "fading/family_spec.hpp"

#include <cctype>
#include <charconv>
#include <vector>

#include "fading/errors.hpp"
#include "fading/families.hpp"
#include "fading/graph_io.hpp"

namespace fading {

namespace {

class SpecParser {
public:
    explicit SpecParser(std::string_view text) : text_(text) {}

    Graph parse()
    {
        Graph g = expression();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected trailing input");
        return g;
    }

private:
    [[noreturn]] void fail(const std::string& why) const
    {
        throw ParameterError("family spec '" + std::string(text_) + "' at offset " + std::to_string(pos_) + ": " +
                             why);
    }

    void skip_space()
    {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c)
    {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    void expect(char c)
    {
        if (!accept(c))
            fail(std::string("expected '") + c + "'");
    }

    std::string name()
    {
        skip_space();
        const std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_)
            fail("expected a family name");
        return std::string(text_.substr(start, pos_ - start));
    }

    int integer()
    {
        skip_space();
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{})
            fail("expected an integer");
        pos_ = static_cast<std::size_t>(ptr - text_.data());
        return value;
    }

    // Comma-separated integers; stops before a comma not followed by a digit.
    std::vector<int> integers()
    {
        std::vector<int> out{integer()};
        for (;;) {
            skip_space();
            if (pos_ + 1 < text_.size() && text_[pos_] == ',' &&
                std::isdigit(static_cast<unsigned char>(text_[pos_ + 1]))) {
                ++pos_;
                out.push_back(integer());
            } else {
                return out;
            }
        }
    }

    std::vector<int> arity(const std::string& family, std::size_t count)
    {
        std::vector<int> args = integers();
        if (args.size() != count)
            fail(family + " takes " + std::to_string(count) + " parameter(s)");
        return args;
    }

    Graph expression()
    {
        const std::string family = name();
        if (family == "g6") {
            expect(':');
            const std::size_t start = pos_;
            while (pos_ < text_.size() && text_[pos_] >= 63 && text_[pos_] <= 126)
                ++pos_;
            return parse_graph6(text_.substr(start, pos_ - start));
        }
        if (accept(':')) {
            if (family == "complete_bipartite") {
                auto ab = arity(family, 2);
                return complete_bipartite(ab[0], ab[1]);
            }
            const int n = arity(family, 1)[0];
            if (family == "null")
                return null_graph(n);
            if (family == "complete")
                return complete(n);
            if (family == "path")
                return path(n);
            if (family == "cycle")
                return cycle(n);
            if (family == "star")
                return star(n);
            fail("unknown family '" + family + "'");
        }
        expect('(');
        Graph inner = expression();
        Graph result;
        if (family == "mycielskian") {
            result = mycielskian(inner);
        } else if (family == "thorn") {
            expect(';');
            result = thorn(inner, integers());
        } else if (family == "windmill") {
            expect(';');
            result = windmill(inner, integer());
        } else if (family == "join" || family == "corona") {
            expect(',');
            Graph other = expression();
            result = family == "join" ? join(inner, other) : corona(inner, other);
        } else {
            fail("unknown operator '" + family + "'");
        }
        expect(')');
        return result;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Graph build_family(std::string_view spec)
{
    return SpecParser(spec).parse();
}

} // namespace fading

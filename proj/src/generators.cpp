#include "paritykit/generators.hpp"

#include <vector>

namespace paritykit {

namespace {

void check_bound(const char* family, std::size_t n, std::size_t bound) {
    if (n > bound) {
        throw BoundExceeded(std::string(family) + " size " + std::to_string(n) + " exceeds the bound " +
                            std::to_string(bound));
    }
}

Element element(std::string name, std::size_t dim) {
    Element e;
    e.name = std::move(name);
    e.dim = dim;
    if (dim > 0) {
        e.neg = Multiset(dim - 1);
        e.pos = Multiset(dim - 1);
    }
    return e;
}

}  // namespace

ParityStructure globe(std::size_t n) {
    check_bound("globe", n, max_globe);
    std::vector<Element> out;
    auto cell = [](std::size_t k, char sign) { return "e" + std::to_string(k) + sign; };
    for (std::size_t k = 0; k < n; ++k) {
        for (char sign : {'-', '+'}) {
            Element e = element(cell(k, sign), k);
            if (k > 0) {
                e.neg.add(cell(k - 1, '-'));
                e.pos.add(cell(k - 1, '+'));
            }
            out.push_back(std::move(e));
        }
    }
    Element top = element("top", n);
    if (n > 0) {
        top.neg.add(cell(n - 1, '-'));
        top.pos.add(cell(n - 1, '+'));
    }
    out.push_back(std::move(top));
    return ParityStructure::from_elements(std::move(out));
}

ParityStructure oriental(std::size_t n) {
    check_bound("oriental", n, max_oriental);
    std::vector<Element> out;
    const std::size_t vertices = n + 1;
    for (unsigned mask = 1; mask < (1u << vertices); ++mask) {
        std::string name;
        for (std::size_t v = 0; v < vertices; ++v) {
            if (mask & (1u << v)) name += static_cast<char>('0' + v);
        }
        Element e = element(name, name.size() - 1);
        if (name.size() > 1) {
            for (std::size_t i = 0; i < name.size(); ++i) {
                std::string f = name.substr(0, i) + name.substr(i + 1);
                (i % 2 == 0 ? e.pos : e.neg).add(f);
            }
        }
        out.push_back(std::move(e));
    }
    return ParityStructure::from_elements(std::move(out));
}

ParityStructure cube(std::size_t n) {
    check_bound("cube", n, max_cube);
    std::vector<Element> out;
    std::size_t total = 1;
    for (std::size_t i = 0; i < n; ++i) total *= 3;
    for (std::size_t code = 0; code < total; ++code) {
        std::string word(n, '0');
        std::size_t c = code;
        std::size_t stars = 0;
        for (std::size_t i = 0; i < n; ++i, c /= 3) {
            word[i] = "01*"[c % 3];
            if (word[i] == '*') ++stars;
        }
        // the empty word is not a usable name; the 0-cube's point is "()"
        Element e = element(n == 0 ? "()" : word, stars);
        std::size_t j = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (word[i] != '*') continue;
            ++j;
            std::string one = word;
            std::string zero = word;
            one[i] = '1';
            zero[i] = '0';
            if (j % 2 == 1) {
                e.pos.add(one);
                e.neg.add(zero);
            } else {
                e.neg.add(one);
                e.pos.add(zero);
            }
        }
        out.push_back(std::move(e));
    }
    return ParityStructure::from_elements(std::move(out));
}

ParityStructure generate(const FamilySpec& spec) {
    switch (spec.family) {
        case Family::globe:
            return globe(spec.n);
        case Family::oriental:
            return oriental(spec.n);
        case Family::cube:
            return cube(spec.n);
    }
    throw std::invalid_argument("unknown family");
}

Family parse_family(const std::string& name) {
    if (name == "globe") return Family::globe;
    if (name == "oriental") return Family::oriental;
    if (name == "cube") return Family::cube;
    throw std::invalid_argument("unknown family '" + name + "'");
}

std::string to_string(Family f) {
    switch (f) {
        case Family::globe:
            return "globe";
        case Family::oriental:
            return "oriental";
        case Family::cube:
            return "cube";
    }
    return "?";
}

}  // namespace paritykit

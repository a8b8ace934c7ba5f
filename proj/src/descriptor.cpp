#include "gammalab/descriptor.hpp"

#include "gammalab/errors.hpp"

#include <sstream>

namespace gammalab {

FieldDescriptor parse_descriptor(const std::string& text) {
    FieldDescriptor d;
    d.text = text;
    if (text.empty()) throw UsageError("empty field descriptor");

    if (text == "Q" || text == "q") {
        d.abelian = rationals();
        return d;
    }
    if (text.rfind("sqrt", 0) == 0) {
        long v = 0;
        try {
            std::size_t pos = 0;
            v = std::stol(text.substr(4), &pos);
            if (pos != text.size() - 4) throw std::invalid_argument("trail");
        } catch (...) {
            throw UsageError("bad sqrt descriptor: " + text);
        }
        d.abelian = quadratic_field(v);
        return d;
    }
    if (text.rfind("zeta", 0) == 0) {
        unsigned long v = 0;
        try {
            std::size_t pos = 0;
            v = std::stoul(text.substr(4), &pos);
            if (pos != text.size() - 4) throw std::invalid_argument("trail");
        } catch (...) {
            throw UsageError("bad zeta descriptor: " + text);
        }
        d.abelian = cyclotomic_field(v);
        return d;
    }
    if (text.rfind("cyclic(", 0) == 0 && text.back() == ')') {
        std::string body = text.substr(7, text.size() - 8);
        auto comma = body.find(',');
        if (comma == std::string::npos) throw UsageError("bad cyclic descriptor: " + text);
        try {
            unsigned long q = std::stoul(body.substr(0, comma));
            unsigned long p = std::stoul(body.substr(comma + 1));
            d.abelian = cyclic_subfield(q, p);
        } catch (const Error&) {
            throw;
        } catch (...) {
            throw UsageError("bad cyclic descriptor: " + text);
        }
        return d;
    }
    if (text.rfind("m=", 0) == 0) {
        d.abelian = parse_abelian(text);
        return d;
    }
    if (text.rfind("poly=", 0) == 0) {
        std::vector<BigInt> coeffs;
        std::stringstream ss(text.substr(5));
        std::string item;
        while (std::getline(ss, item, ',')) {
            try {
                coeffs.push_back(parse_bigint(item));
            } catch (...) {
                throw UsageError("bad poly descriptor coefficient '" + item + "'");
            }
        }
        if (coeffs.empty()) throw UsageError("bad poly descriptor: " + text);
        IntPoly f(std::move(coeffs));
        if (f.degree() < 1) throw UsageError("poly descriptor must have degree >= 1");
        d.poly = std::move(f);
        return d;
    }
    throw UsageError("unrecognized field descriptor: " + text +
                     " (expected Q, sqrt<d>, zeta<n>, cyclic(q,p), m=..;H=.., or poly=...)");
}

} // namespace gammalab

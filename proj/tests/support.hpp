#pragma once

#include "liejac/liealg.hpp"
#include "liejac/pbw.hpp"
#include "liejac/polyring.hpp"

#include <filesystem>
#include <random>
#include <string>
#include <vector>

#include <unistd.h>

namespace testing {

using namespace liejac;

struct TempDir {
    std::filesystem::path path;
    TempDir()
    {
        path = std::filesystem::temp_directory_path() /
               ("liejac-test-" + std::to_string(::getpid()) + "-" + std::to_string(std::random_device{}()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

inline Rational random_rational(std::mt19937_64& rng, int range = 5)
{
    std::uniform_int_distribution<int> num(-range, range), den(1, 3);
    return fraction(num(rng), den(rng));
}

inline CommPoly random_poly(std::mt19937_64& rng, const std::vector<Letter>& letters, unsigned max_degree,
                            unsigned terms)
{
    CommPoly p;
    std::uniform_int_distribution<unsigned> deg(0, max_degree);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    for (unsigned k = 0; k < terms; ++k) {
        std::vector<Monomial::Factor> f;
        unsigned d = deg(rng);
        for (unsigned j = 0; j < d; ++j) f.emplace_back(letters[pick(rng)], 1);
        p += CommPoly::term(Monomial::from_factors(f), random_rational(rng));
    }
    return p;
}

inline NCElement random_nc(std::mt19937_64& rng, const std::vector<Letter>& letters, unsigned max_length,
                           unsigned terms)
{
    NCElement e;
    std::uniform_int_distribution<unsigned> len(0, max_length);
    std::uniform_int_distribution<std::size_t> pick(0, letters.size() - 1);
    for (unsigned k = 0; k < terms; ++k) {
        Word w;
        unsigned n = len(rng);
        for (unsigned j = 0; j < n; ++j) w.push_back(letters[pick(rng)]);
        e.add_term(w, random_rational(rng));
    }
    return e;
}

inline CommPoly var(Letter l) { return CommPoly::variable(l); }

} // namespace testing


// Iterates Fermat's method on a quartic given as c0,...,c4 (default: the
// isosceles seed quartic at (2,1)) and prints each z with sqrt(f(z)).

#include "bq/fermat.hpp"

#include <iostream>

int main(int argc, char** argv) {
    try {
        bq::Quartic f = bq::parse_quartic(argc > 1 ? argv[1] : "4,-16,25,-16,4");
        std::size_t k = argc > 2 ? std::stoul(argv[2]) : 3;
        bq::FermatRun run = bq::fermat_iterate(f, k);
        for (const bq::Rational& z : run.solutions)
            std::cout << "z = " << z << "  sqrt f(z) = " << *bq::rational_square_root(f.eval(z)) << "\n";
        if (run.stalled)
            std::cout << "(stalled after " << run.solutions.size() << ")\n";
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

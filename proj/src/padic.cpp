#include "piexp/padic.hpp"

#include <sstream>

namespace piexp {

std::string padic_str(const PadicScalar& x) {
    std::ostringstream os;
    switch (x.st) {
        case PadicScalar::St::Zero: os << "0"; break;
        case PadicScalar::St::Near: os << "O(" << x.p << "^" << x.v << ")"; break;
        case PadicScalar::St::Exact:
            if (x.v == 0)
                os << x.u.get_str();
            else if (x.u == 1)
                os << x.p << "^" << x.v;
            else
                os << x.u.get_str() << "*" << x.p << "^" << x.v;
            break;
        case PadicScalar::St::Approx:
            if (x.v == 0)
                os << x.um.get_str();
            else
                os << x.um.get_str() << "*" << x.p << "^" << x.v;
            os << " + O(" << x.p << "^" << (x.v + x.n) << ")";
            break;
    }
    return os.str();
}

}  // namespace piexp

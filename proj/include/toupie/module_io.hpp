#ifndef TOUPIE_MODULE_IO_HPP
#define TOUPIE_MODULE_IO_HPP

#include "toupie/rep.hpp"

#include <string>

namespace toupie {

// Text form of a representation:
//
//   module
//   dims d_0 d_1 ... d_{n-1}          # in quiver vertex order
//   arrow K R C: e_11 e_12 ... e_RC   # row-major, scalar syntax as in the
//                                     # quiver grammar; zero matrices may be
//                                     # omitted
//
std::string serialize_module(const Representation& M);

Representation parse_module(std::shared_ptr<const GeneralBoundQuiver> q, const std::string& text);

}  // namespace toupie

#endif

// Umbrella header for the three parsers and printers.

#ifndef BISIMKIT_SYNTAX_HPP
#define BISIMKIT_SYNTAX_HPP

#include "bisimkit/ccs_syntax.hpp"
#include "bisimkit/pi_syntax.hpp"

#endif  // BISIMKIT_SYNTAX_HPP

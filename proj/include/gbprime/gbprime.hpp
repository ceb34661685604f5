#pragma once

// Convenience umbrella header for the whole library (the CLI front end is
// separate in gbprime/cli.hpp because it pulls in CLI11 and nlohmann/json).

#include "gbprime/buchberger.hpp"
#include "gbprime/division.hpp"
#include "gbprime/errors.hpp"
#include "gbprime/monomial.hpp"
#include "gbprime/oracle.hpp"
#include "gbprime/ordering.hpp"
#include "gbprime/parser.hpp"
#include "gbprime/polynomial.hpp"
#include "gbprime/spoly.hpp"

#ifndef TURAN_TURAN_HPP
#define TURAN_TURAN_HPP

#include "turan/checks.hpp"
#include "turan/constructions.hpp"
#include "turan/counting.hpp"
#include "turan/cycles.hpp"
#include "turan/errors.hpp"
#include "turan/extremal.hpp"
#include "turan/generators.hpp"
#include "turan/graph.hpp"
#include "turan/graph6.hpp"
#include "turan/maxcut.hpp"
#include "turan/odd_cycle_sets.hpp"
#include "turan/pattern.hpp"
#include "turan/prime_field.hpp"
#include "turan/property_testing.hpp"
#include "turan/random.hpp"
#include "turan/verification.hpp"
#include "turan/version.hpp"
#include "turan/vertex_set.hpp"

#endif  // TURAN_TURAN_HPP

#ifndef RPGC_RPGC_HPP
#define RPGC_RPGC_HPP

#include "rpgc/bounds.hpp"
#include "rpgc/compiler.hpp"
#include "rpgc/evaluation.hpp"
#include "rpgc/field.hpp"
#include "rpgc/linalg.hpp"
#include "rpgc/places.hpp"
#include "rpgc/poly.hpp"
#include "rpgc/runtime.hpp"
#include "rpgc/strategy.hpp"
#include "rpgc/tables.hpp"

#endif

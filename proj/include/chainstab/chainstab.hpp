#pragma once

#include "chainstab/chain.hpp"
#include "chainstab/conditions.hpp"
#include "chainstab/errors.hpp"
#include "chainstab/euler_pairing.hpp"
#include "chainstab/exact_lp.hpp"
#include "chainstab/moduli.hpp"
#include "chainstab/nilpotent_cone.hpp"
#include "chainstab/param_space.hpp"
#include "chainstab/rational.hpp"

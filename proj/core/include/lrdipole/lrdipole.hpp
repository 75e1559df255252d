#pragma once

#include "lrdipole/assembly.hpp"
#include "lrdipole/auxiliary.hpp"
#include "lrdipole/errors.hpp"
#include "lrdipole/fock.hpp"
#include "lrdipole/odeint.hpp"
#include "lrdipole/params.hpp"
#include "lrdipole/phases.hpp"
#include "lrdipole/quadrature.hpp"

#pragma once

#include "pfaff/dfmodels/gauge.hpp"
#include "pfaff/dfmodels/models.hpp"
#include "pfaff/dfmodels/ode.hpp"
#include "pfaff/dfmodels/pde.hpp"

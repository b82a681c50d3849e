#pragma once

#include "pfaff/gaussmanin/connection.hpp"
#include "pfaff/gaussmanin/connection_io.hpp"
#include "pfaff/gaussmanin/flatness.hpp"
#include "pfaff/gaussmanin/nabla.hpp"
#include "pfaff/gaussmanin/reduce.hpp"
#include "pfaff/gaussmanin/theta.hpp"
#include "pfaff/gaussmanin/tmatrix.hpp"

//! C ABI surface. Filled in once the core API is complete.

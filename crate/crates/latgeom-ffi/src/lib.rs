pub fn placeholder_ffi() {}

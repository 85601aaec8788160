// benchmark helpers live in plucker-core; this crate only hosts bench targets

// Display names for classes, in the order the pairs first occur in the tables.
pub(crate) const TABLE_PAIRS: &str = "\
∗632	cyclic	idt.	idt.\n\
∗632	dihedral	idt.	idt.\n\
632	cyclic	idt.	idt.\n\
632	dihedral	idt.	idt.\n\
632	dihedral	c-ref.	c-ref.\n\
632	cyclic	c-ref.	c-ref.\n\
632	dihedral	idt.	c-ref.\n\
3∗3	cyclic	idt.	idt.\n\
3∗3	dihedral	c-ref.	c-ref.\n\
3∗3	cyclic	c-ref.	c-ref.\n\
3∗3	dihedral	idt.	idt.\n\
3∗3	dihedral	idt.	c-ref.\n\
∗333	cyclic	idt.	idt.\n\
∗333	cyclic	3-rot.	3-rot.⁻¹\n\
∗333	dihedral	t-ref.	t-ref.\n\
∗333	dihedral	t-ref.	t-ref.′\n\
∗333	cyclic	t-ref.	t-ref.\n\
∗333	dihedral	idt.	idt.\n\
∗333	dihedral	idt.	t-ref.\n\
333	cyclic	idt.	idt.\n\
333	cyclic	3-rot.	3-rot.⁻¹\n\
333	dihedral	2-rot.	2-rot.\n\
333	dihedral	2-rot.	2-rot.′\n\
333	dihedral	c-ref.	c-ref.\n\
333	dihedral	t-ref.	t-ref.\n\
333	dihedral	t-ref.	t-ref.′\n\
333	cyclic	c-ref.	c-ref.\n\
333	cyclic	t-ref.	t-ref.\n\
333	cyclic	6-sym.	6-sym.⁻¹\n\
333	dihedral	c-ref.	2-rot.\n\
333	dihedral	t-ref.	2-rot.\n\
333	dihedral	t-ref.	2-rot.′\n\
333	cyclic	2-rot.	2-rot.\n\
333	dihedral	idt.	idt.\n\
333	dihedral	idt.	2-rot.\n\
333	dihedral	c-ref.	t-ref.\n\
333	dihedral	idt.	c-ref.\n\
333	dihedral	idt.	t-ref.\n\
4∗2	cyclic	idt.	idt.\n\
4∗2	cyclic	c-ref.	c-ref.\n\
4∗2	dihedral	c-ref.	c-ref.\n\
4∗2	dihedral	idt.	idt.\n\
4∗2	dihedral	idt.	c-ref.\n\
∗442	cyclic	idt.	idt.\n\
∗442	cyclic	t-ref.	t-ref.\n\
∗442	dihedral	idt.	idt.\n\
∗442	dihedral	t-ref.	t-ref.\n\
∗442	dihedral	idt.	t-ref.\n\
442	cyclic	idt.	idt.\n\
442	cyclic	2-rot.	2-rot.\n\
442	dihedral	idt.	idt.\n\
442	dihedral	2-rot.	2-rot.\n\
442	dihedral	idt.	2-rot.\n\
442	dihedral	c-ref.	c-ref.\n\
442	dihedral	t-ref.	t-ref.\n\
442	dihedral	c-ref.	t-ref.\n\
442	cyclic	c-ref.	c-ref.\n\
442	cyclic	t-ref.	t-ref.\n\
442	dihedral	idt.	c-ref.\n\
442	dihedral	c-ref.	2-rot.\n\
442	dihedral	idt.	t-ref.\n\
442	dihedral	t-ref.	2-rot.\n\
2∗22	cyclic	idt.	idt.\n\
2∗22	cyclic	c-ref.	c-ref.\n\
2∗22	dihedral	idt.	idt.\n\
2∗22	dihedral	c-ref.	c-ref.\n\
2∗22	dihedral	idt.	c-ref.\n\
2∗22	cyclic	d-ref.	d-ref.\n\
2∗22	cyclic	2-rot.	2-rot.\n\
2∗22	dihedral	d-ref.	d-ref.\n\
2∗22	dihedral	2-rot.	2-rot.\n\
2∗22	dihedral	d-ref.	2-rot.\n\
2∗22	dihedral	idt.	d-ref.\n\
2∗22	dihedral	c-ref.	d-ref.\n\
2∗22	dihedral	idt.	2-rot.\n\
2∗22	dihedral	c-ref.	2-rot.\n\
22×	cyclic	idt.	idt.\n\
22×	cyclic	m-ref.	m-ref.\n\
22×	cyclic	2-rot.	2-rot.\n\
22×	dihedral	2-rot.	2-rot.\n\
22×	dihedral	m-ref.	m-ref.\n\
22×	dihedral	idt.	idt.\n\
22×	dihedral	idt.	m-ref.\n\
22×	dihedral	m-ref.	2-rot.\n\
22×	dihedral	idt.	2-rot.\n\
22×	dihedral	m-ref.	m-ref.′\n\
22×	cyclic	d-ref.	d-ref.\n\
22×	cyclic	4-rot.	4-rot.⁻¹\n\
22×	dihedral	d-ref.	d-ref.\n\
22×	dihedral	d-ref.	d-ref.′\n\
22×	dihedral	d-ref.	2-rot.\n\
22×	dihedral	idt.	d-ref.\n\
22×	dihedral	d-ref.	m-ref.\n\
22∗	cyclic	idt.	idt.\n\
22∗	cyclic	c-ref.	c-ref.\n\
22∗	cyclic	2-rot.	2-rot.\n\
22∗	cyclic	m-ref.	m-ref.\n\
22∗	dihedral	c-ref.	c-ref.\n\
22∗	dihedral	idt.	idt.\n\
22∗	dihedral	m-ref.	m-ref.\n\
22∗	dihedral	2-rot.	2-rot.\n\
22∗	dihedral	idt.	2-rot.\n\
22∗	dihedral	m-ref.	2-rot.\n\
22∗	dihedral	c-ref.	m-ref.\n\
22∗	dihedral	idt.	c-ref.\n\
22∗	dihedral	c-ref.	2-rot.\n\
22∗	dihedral	idt.	m-ref.\n\
∗2222	cyclic	idt.	idt.\n\
∗2222	cyclic	m-ref.	m-ref.\n\
∗2222	cyclic	2-rot.	2-rot.\n\
∗2222	dihedral	idt.	idt.\n\
∗2222	dihedral	m-ref.	m-ref.\n\
∗2222	dihedral	2-rot.	2-rot.\n\
∗2222	dihedral	m-ref.	2-rot.\n\
∗2222	dihedral	idt.	m-ref.\n\
∗2222	dihedral	idt.	2-rot.\n\
∗2222	dihedral	m-ref.	m-ref.′\n\
∗2222	cyclic	d-ref.	d-ref.\n\
∗2222	cyclic	4-rot.	4-rot.⁻¹\n\
∗2222	dihedral	d-ref.	d-ref.\n\
∗2222	dihedral	d-ref.	d-ref.′\n\
∗2222	dihedral	idt.	d-ref.\n\
∗2222	dihedral	d-ref.	2-rot.\n\
∗2222	dihedral	d-ref.	m-ref.\n\
∗×	cyclic	idt.	idt.\n\
∗×	dihedral	2-rot.	2-rot.\n\
∗×	cyclic	2-rot.	2-rot.\n\
∗×	dihedral	idt.	idt.\n\
∗×	dihedral	c-ref.	c-ref.\n\
∗×	dihedral	idt.	c-ref.\n\
∗×	dihedral	idt.	2-rot.\n\
∗×	dihedral	2-rot.	c-ref.\n\
××	cyclic	idt.	idt.\n\
××	cyclic	2-sym.	2-sym.\n\
××	dihedral	v-ref.	v-ref.\n\
××	dihedral	2-rot.	2-rot.\n\
××	dihedral	v-ref.	2-rot.′\n\
××	dihedral	idt.	idt.\n\
××	dihedral	m-ref.	m-ref.\n\
××	dihedral	2-sym.	2-sym.\n\
××	cyclic	v-ref.	v-ref.\n\
××	dihedral	c-ref.	c-ref.\n\
××	cyclic	2-rot.	2-rot.\n\
××	dihedral	idt.	2-sym.\n\
××	dihedral	m-ref.	c-ref.\n\
××	dihedral	idt.	m-ref.\n\
××	dihedral	c-ref.	2-sym.\n\
××	dihedral	m-ref.	2-sym.\n\
××	dihedral	idt.	c-ref.\n\
××	dihedral	c-ref.	v-ref.\n\
××	dihedral	m-ref.	v-ref.\n\
××	dihedral	m-ref.	2-rot.\n\
××	dihedral	idt.	v-ref.\n\
××	dihedral	2-sym.	v-ref.\n\
××	dihedral	c-ref.	2-rot.\n\
××	dihedral	2-sym.	2-rot.′\n\
××	dihedral	idt.	2-rot.\n\
∗∗	cyclic	idt.	idt.\n\
∗∗	cyclic	c-ref.	c-ref.\n\
∗∗	dihedral	v-ref.	v-ref.\n\
∗∗	dihedral	2-rot.	2-rot.\n\
∗∗	dihedral	v-ref.	2-rot.\n\
∗∗	dihedral	idt.	idt.\n\
∗∗	dihedral	2-sym.	2-sym.\n\
∗∗	cyclic	v-ref.	v-ref.\n\
∗∗	dihedral	c-ref.	c-ref.\n\
∗∗	dihedral	g-ref.	g-ref.\n\
∗∗	cyclic	2-rot.	2-rot.\n\
∗∗	dihedral	idt.	c-ref.\n\
∗∗	dihedral	2-sym.	g-ref.\n\
∗∗	dihedral	idt.	2-sym.\n\
∗∗	dihedral	c-ref.	g-ref.\n\
∗∗	dihedral	idt.	g-ref.\n\
∗∗	dihedral	c-ref.	2-sym.\n\
∗∗	dihedral	idt.	v-ref.\n\
∗∗	dihedral	v-ref.	c-ref.\n\
∗∗	dihedral	2-sym.	v-ref.\n\
∗∗	dihedral	c-ref.	2-rot.\n\
∗∗	dihedral	g-ref.	v-ref.\n\
∗∗	dihedral	idt.	2-rot.\n\
∗∗	dihedral	2-sym.	2-rot.\n\
∗∗	dihedral	g-ref.	2-rot.′\n\
2222	cyclic	idt.	idt.\n\
2222	cyclic	m-rot.	m-rot.\n\
2222	dihedral	idt.	idt.\n\
2222	dihedral	idt.	m-rot.\n\
2222	dihedral	m-rot.	m-rot.\n\
2222	dihedral	c-rot.	m-rot.\n\
2222	dihedral	c-ref.	c-ref.\n\
2222	dihedral	m-ref.	m-ref.\n\
2222	dihedral	2-sym.	2-sym.\n\
2222	dihedral	2-sym.	m-ref.\n\
2222	dihedral	d-ref.	d-ref.\n\
2222	dihedral	c-ref.	m-ref.\n\
2222	dihedral	d-ref.	d-ref.′\n\
2222	dihedral	c-ref.	2-sym.\n\
2222	dihedral	m-ref.	m-ref.′\n\
2222	cyclic	c-ref.	c-ref.\n\
2222	cyclic	m-ref.	m-ref.\n\
2222	cyclic	2-sym.	2-sym.\n\
2222	cyclic	d-ref.	d-ref.\n\
2222	cyclic	4-sym.	4-sym.⁻¹\n\
2222	dihedral	c-rot.	c-ref.\n\
2222	dihedral	idt.	c-ref.\n\
2222	dihedral	c-ref.	m-rot.\n\
2222	dihedral	m-ref.	m-rot.′\n\
2222	dihedral	c-rot.	m-ref.\n\
2222	dihedral	idt.	m-ref.\n\
2222	dihedral	m-ref.	m-rot.\n\
2222	dihedral	c-rot.	2-sym.\n\
2222	dihedral	idt.	2-sym.\n\
2222	dihedral	2-sym.	m-rot.′\n\
2222	dihedral	idt.	d-ref.\n\
2222	dihedral	c-rot.	d-ref.\n\
2222	dihedral	m-rot.	d-ref.\n\
2222	cyclic	d-rot.	d-rot.\n\
2222	cyclic	4-rot.	4-rot.⁻¹\n\
2222	dihedral	d-rot.	d-rot.\n\
2222	dihedral	d-rot.	d-rot.′\n\
2222	dihedral	idt.	d-rot.\n\
2222	dihedral	c-rot.	d-rot.\n\
2222	dihedral	m-rot.	d-rot.\n\
2222	dihedral	c-ref.	d-ref.\n\
2222	dihedral	2-sym.	d-ref.\n\
2222	dihedral	m-ref.	d-ref.\n\
2222	dihedral	c-ref.	d-rot.\n\
2222	dihedral	2-sym.	d-rot.′\n\
2222	dihedral	d-ref.	d-rot.\n\
2222	dihedral	d-ref.	d-rot.′\n\
2222	dihedral	m-ref.	d-rot.\n\
2222	cyclic	3-aff.	3-aff.⁻¹\n\
2222	dihedral	2-aff.	d-ref.\n\
○	cyclic	idt.	idt.\n\
○	dihedral	2-rot.	2-rot.\n\
○	dihedral	v-ref.	v-ref.\n\
○	dihedral	h-grf.	h-grf.\n\
○	cyclic	2-rot.	2-rot.\n\
○	dihedral	e-ref.	e-ref.\n\
○	dihedral	v-ref.	h-grf.\n\
○	dihedral	idt.	idt.\n\
○	dihedral	v-rot.	v-rot.\n\
○	cyclic	v-ref.	v-ref.\n\
○	dihedral	idt.	h-rot.\n\
○	dihedral	v-rot.	2-sym.\n\
○	cyclic	d-ref.	d-ref.\n\
○	dihedral	idt.	2-rot.\n\
○	dihedral	h-ref.	2-rot.\n\
○	dihedral	v-rot.	2-rot.\n\
○	dihedral	v-grf.	2-rot.\n\
○	dihedral	e-ref.	2-rot.\n\
○	dihedral	v-ref.	h-ref.\n\
○	dihedral	h-grf.	h-ref.\n\
○	dihedral	v-grf.	h-grf.\n\
○	dihedral	d-ref.	e-ref.\n\
○	dihedral	idt.	h-ref.\n\
○	dihedral	v-rot.	v-grf.\n\
○	dihedral	v-rot.	h-ref.\n\
○	dihedral	idt.	v-grf.\n\
○	dihedral	h-rot.	h-ref.\n\
○	dihedral	h-rot.	v-grf.\n\
○	dihedral	2-sym.	v-grf.'\n\
○	dihedral	2-sym.	h-ref.'\n\
○	dihedral	idt.	e-ref.\n\
○	dihedral	e-ref.″	2-sym.\n\
○	dihedral	v-rot.	d-ref.\n\
○	cyclic	4-rot.	4-rot.⁻¹\n\
○	dihedral	h-ref.	d-ref.\n\
○	dihedral	v-grf.	d-ref.\n\
○	cyclic	3-aff.	3-aff.⁻¹\n\
○	dihedral	e-ref.	m-aff.\n\
○	dihedral	n-aff.	d-ref.\n\
○	cyclic	6-aff.	6-aff.⁻¹\n\
○	dihedral	m-aff.	d-ref.\n\
";
